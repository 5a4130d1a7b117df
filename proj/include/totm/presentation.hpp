// Words over a finite alphabet of named elements, their evaluation, the
// deferment substitutions, the eight relation families, and the product
// families used to separate elements.
//
// The alphabet is an explicit finite registry: each letter is a named
// element of depth at most 3, inverse pairs are registered symmetrically,
// and a letter may carry a one-step deferment word (its image under the
// substitution that re-enacts every letter inside the standard depth-1
// root system). Words evaluate through the reversed multiplication, so
// the carrier of a word is the composite of the letters' carriers read
// right to left.
//
// The relation families are built instance by instance and then verified
// semantically: every emitted relation is checked by evaluating both
// sides. Family 4 is found by budgeted breadth-first search and is the
// only family that can be truncated; truncations are reported, never
// silently dropped.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "totm/rel.hpp"

namespace totm {

using MonoidWord = std::vector<std::string>;

struct GenAlphabet {
    std::vector<std::string> order;              // registration order
    std::map<std::string, RelElement> letters;
    std::map<std::string, std::string> inverse_of;  // symmetric pairs
    std::map<std::string, MonoidWord> defer_word;   // one-step deferment
};

struct Relation {
    MonoidWord left;
    MonoidWord right;
    int family = 0;  // 1..8
};

struct R0Result {
    std::vector<Relation> relations;
    std::vector<std::string> notes;  // truncations and skipped instances
};

struct VerifyReport {
    std::vector<std::string> lines;
    int checked = 0;
    int failed = 0;
};

// --- alphabet -----------------------------------------------------------------

// Registers a letter; rejects duplicate names, empty names, and elements
// of depth > 3.
void register_letter(const Params& p, GenAlphabet& A, const std::string& name,
                     RelElement element);

// Marks two registered letters as mutually inverse after checking that
// both products are the identity.
void register_inverse_pair(const Params& p, GenAlphabet& A,
                           const std::string& a, const std::string& b);

const RelElement& letter(const GenAlphabet& A, const std::string& name);

// The standard alphabet: the identity, the splitting and merging
// generators, the root-system transports for the depth-1 diagonal
// systems and for the standard depth-2 system, and the deferment letters
// needed to make the one-step deferment total on every letter.
GenAlphabet standard_alphabet(const Params& p);

// Alphabet file: one `name = expression` per line, where the expression
// is a total-map literal or one of the constructor calls
//   identity, gen_U, gen_U_dim0, gen_pi0, gen_pi_w((..)), gen_pi_s((..)),
//   transport({..}, {..}), defer(name, {..}), inverse(name);
// a line consisting of the word `standard` merges the standard alphabet.
// '#' starts a comment.
GenAlphabet parse_alphabet_file(const Params& p, const std::string& text);

// --- words -----------------------------------------------------------------------

// Evaluation: the empty word is the identity; letters multiply left to
// right (so their carriers compose right to left).
RelElement Phi(const Params& p, const MonoidWord& w, const GenAlphabet& A);

// Space-joined letter names; "eps" for the empty word.
std::string word_to_text(const MonoidWord& w);

// One-step deferment substitution, extended letterwise; throws
// "missing deferment letter" when a letter has no registered image.
MonoidWord sdef(const Params& p, const MonoidWord& w, const GenAlphabet& A);

// Deferment to an arbitrary root system: iterated one-step deferment for
// the standard systems, otherwise conjugation by a registered transport
// letter that carries rs onto the standard depth-1 system.
MonoidWord def_w(const Params& p, const MonoidWord& w, const RootSystem& rs,
                 const GenAlphabet& A);

// The depth-1 diagonal root systems, one per flat depth-1 shrub, in
// lexicographic shrub order.
std::vector<RootSystem> diagonal_systems(const Params& p);

// --- relations ---------------------------------------------------------------------

// The eight relation families over the given alphabet. `budget` caps the
// number of words evaluated by the family-4 search; truncation is
// reported in the notes.
R0Result build_R0(const Params& p, const GenAlphabet& A,
                  long long budget = 200000);

// Evaluates both sides of every relation; one line per relation,
// failures followed by the two carriers.
VerifyReport verify_relations(const Params& p,
                              const std::vector<Relation>& rels,
                              const GenAlphabet& A);

// --- separating products ---------------------------------------------------------------

// All elements sending root m into the cone of an arbitrary flat depth-d
// shrub, independently per root: k^(n*d*r) elements in lexicographic
// tuple order.
std::vector<RelElement> P_d(const Params& p, int d);

// The word x equals, under evaluation, the contraction U followed by the
// deferred copies of x routed into each diagonal cone.
bool claim2_check(const Params& p, const MonoidWord& x, const GenAlphabet& A);

// True when "right-multiplication by every element of P_d agrees" is
// equivalent to equality, for the given pair.
bool claim3_check(const Params& p, const RelElement& g, const RelElement& h,
                  int d);

}  // namespace totm
