// Shrubberies: the points of the n-dimensional address space.
//
// A shrubbery is a root index together with an n-tuple of address words,
// one word per dimension, each word over the digit alphabet {0..k-1}.
// Shrubberies are ordered coordinatewise by the prefix order on words
// (same root required); this is the "is an ancestor of" order on the
// product of k-ary trees. The cone of a shrubbery is the set of
// shrubberies above it; two shrubberies are compatible when their cones
// intersect (equivalently, when they have a join) and joinless otherwise.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "totm/base.hpp"

namespace totm {

using Word = std::vector<std::uint8_t>;
using Shrub = std::vector<Word>;  // always exactly n words

struct Shrubbery {
    int root = 0;
    Shrub shrub;

    friend auto operator<=>(const Shrubbery&, const Shrubbery&) = default;
    friend bool operator==(const Shrubbery&, const Shrubbery&) = default;
};

// --- word helpers -----------------------------------------------------------

bool word_is_prefix(const Word& p, const Word& w);

// Suffix of w after removing the prefix p. Requires word_is_prefix(p, w).
Word word_suffix(const Word& p, const Word& w);

// --- construction and validation --------------------------------------------

// The root shrubbery (m, (e,...,e)).
Shrubbery root_shrubbery(const Params& p, int root);

// Throws totm::error when s has the wrong arity, a bad root, or an
// out-of-range digit.
void validate(const Params& p, const Shrubbery& s);

// --- basic operations --------------------------------------------------------

// Length of the longest coordinate word.
int depth(const Shrub& s);
int depth(const Shrubbery& s);

// True when every coordinate word has the same length.
bool is_flat(const Shrub& s);
bool is_flat(const Shrubbery& s);

// Coordinatewise concatenation: the point reached from s by descending
// further along t. Requires t to have the same arity as s.
Shrubbery concat(const Shrubbery& s, const Shrub& t);
Shrub concat(const Shrub& s, const Shrub& t);

// Prefix order: u <= v iff same root and every coordinate of u is a
// prefix of the corresponding coordinate of v.
bool leq(const Shrubbery& u, const Shrubbery& v);

// Relative address of v under u. Requires leq(u, v).
Shrub suffix_of(const Shrubbery& u, const Shrubbery& v);

// Compatible: cones intersect, i.e. same root and in every dimension one
// coordinate word is a prefix of the other. Joinless is the negation.
bool compatible(const Shrubbery& u, const Shrubbery& v);
inline bool joinless(const Shrubbery& u, const Shrubbery& v) {
    return !compatible(u, v);
}

// The child of s obtained by appending digit j in dimension dim.
Shrubbery child(const Shrubbery& s, int dim, int j);

// All flat shrubs of the given depth, in lexicographic order
// (dimension-major, then digit order). There are k^(n*d) of them.
std::vector<Shrub> flat_shrubs(const Params& p, int d);

// All flat shrubberies of the given depth over all roots, sorted.
// There are r * k^(n*d) of them; throws totm::error when that exceeds
// the enumeration guard (2^20).
std::vector<Shrubbery> flat_shrubberies(const Params& p, int d);

// --- rendering helpers -------------------------------------------------------

std::string word_to_string(const Word& w);       // "e" for the empty word
std::string shrub_to_string(const Shrub& s);     // "(w0,...,w{n-1})"
std::string to_string(const Shrubbery& s);       // "(root,(w0,...))"

}  // namespace totm
