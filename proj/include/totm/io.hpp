// Literal grammar: parsers and canonical printers.
//
// Every value the command line exchanges has a single canonical text form,
// and every printed literal re-parses to an equal value:
//   word          e | digit+                       (digits 0..k-1)
//   shrubbery     (root,(word,...,word))           one word per dimension
//   code          { shrubbery; ...; shrubbery }    sorted
//   total map     { shrubbery -> shrubbery; ... }  sorted by left side
//   labeled set   { shrubbery: label; ... }        sorted
//   root system   { shrubbery; ...; shrubbery }    ORDER PRESERVED
//   term          g0 | a<dim>_<digit>(term) | l<dim>(term,...,term)
//   endomorphism  [term; ...; term]                one term per generator
// Parsers are whitespace-tolerant and report failures with 1-based line
// and column positions; printers emit the canonical spacing shown by the
// to_string functions.

#pragma once

#include <string>

#include "totm/endo.hpp"
#include "totm/prefix_code.hpp"
#include "totm/rel.hpp"
#include "totm/shrubbery.hpp"
#include "totm/term.hpp"
#include "totm/tot.hpp"

namespace totm {

Word parse_word_literal(const Params& p, const std::string& text);
Shrubbery parse_shrubbery_literal(const Params& p, const std::string& text);
Code parse_code_literal(const Params& p, const std::string& text);
TotElement parse_tot_literal(const Params& p, const std::string& text);
LabeledGenSet parse_labeled_literal(const Params& p, const std::string& text);
RootSystem parse_root_system_literal(const Params& p, const std::string& text);
TermPtr parse_term_literal(const Params& p, const std::string& text);
Endo parse_endo_literal(const Params& p, const std::string& text);

std::string code_to_string(const Code& code);
std::string labeled_to_string(const LabeledGenSet& L);
std::string root_system_to_string(const RootSystem& w);
std::string endo_to_string(const Endo& e);

}  // namespace totm
