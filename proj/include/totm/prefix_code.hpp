// Complete prefix codes over the n-dimensional address space.
//
// A prefix code is a pairwise joinless set of shrubberies: the cones of its
// elements are pairwise disjoint. It is complete when the cones cover every
// point, which is decided by the flat-address criterion: with d the depth of
// the code, every flat shrubbery of depth d lies above exactly one element.
//
// Elementary expansions replace an element by its k children in one
// dimension. Note that for n >= 3 not every complete prefix code is
// reachable from the root code by elementary expansions, so enumeration
// works by exact cover over the flat grid instead of by expansion search.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "totm/shrubbery.hpp"

namespace totm {

// Codes are kept sorted and duplicate-free.
using Code = std::vector<Shrubbery>;

// Multisets carry explicit multiplicities (always >= 1) because expansions
// are defined on multisets and duplicate detection matters.
using ShrubberyMultiset = std::map<Shrubbery, int>;

// Sorts, rejects duplicates and validates pairwise joinlessness.
Code make_code(const Params& p, std::vector<Shrubbery> elems);

bool is_prefix_code(const Params& p, const std::vector<Shrubbery>& elems);

// Flat-address completeness criterion.
bool is_complete(const Params& p, const Code& code);

// Remove one copy of a, add one copy of each dimension-i child of a.
ShrubberyMultiset elementary_expansion(const Params& p,
                                       const ShrubberyMultiset& M,
                                       const Shrubbery& a, int dim);

// Convenience form for codes: expand the element a of the code in place.
Code expand_code_at(const Params& p, const Code& code, const Shrubbery& a,
                    int dim);

// Downward closure of the code: every shrubbery lying below some element.
// This is the node set of the pseudotree spanned by the code.
// The code must be complete.
std::vector<Shrubbery> pst(const Params& p, const Code& code);

// For each element c of the complete code, the flat depth-N shrubberies
// above c. Their union is the whole flat depth-N grid, disjointly.
std::vector<std::pair<Shrubbery, std::vector<Shrubbery>>> expand_to_flat(
    const Params& p, const Code& code, int N);

// All relative addresses t such that concat(c, t) is flat of depth d.
// Requires d >= the length of every coordinate of c.
std::vector<Shrub> flat_extensions(const Params& p, const Shrubbery& c, int d);

// All complete prefix codes of depth <= max_depth, sorted lexicographically.
// max_depth is capped at 3 and the flat grid at 2^20 cells.
std::vector<Code> enumerate_complete_codes(const Params& p, int max_depth);

// Canonical partition of the complement of a joinless family: the pieces
// returned are joinless from every member of `pieces`, and together with the
// members' cones they partition the whole space. Deterministic refinement:
// a candidate that meets some member without being below it splits in the
// smallest deficient dimension.
std::vector<Shrubbery> canonical_complement(const Params& p,
                                            const std::vector<Shrubbery>& pieces);

// Smallest grid-refined complete code containing the joinless set P, built
// by splitting from the roots one dimension at a time (at each node the
// chosen dimension must make progress toward every compatible element of P).
// Always succeeds for n <= 2; may throw for n >= 3 when no dimension is
// valid at some node.
Code canonical_completion(const Params& p, const std::vector<Shrubbery>& P);

}  // namespace totm
