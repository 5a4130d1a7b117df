// Labeled generating sets, the containment relation sigma, the reversed
// multiplication, matrix rendering, and the named generating elements.
//
// A labeled generating set is a complete prefix code whose elements carry
// natural-number labels. An element of the relation monoid is stored by
// its reduced total-map carrier; the pair (L1, L2) belongs to sigma of
// that element exactly when the carrier sends each key of L2 to the key
// of L1 wearing the same label. Multiplication reverses carrier
// composition: the product a*b carries "b then a", which makes the
// passage from total maps to relations an anti-isomorphism and matches
// the arrow-pasting convention of the rendered displays.
//
// Rendering writes a labeled set over a grid-splittable code as nested
// brackets, dimension 0 listed horizontally and dimension 1 vertically
// (a one-dimensional code renders vertically); the r components are
// wrapped in a tuple when r >= 2.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "totm/tot.hpp"

namespace totm {

struct LabeledGenSet {
    std::map<Shrubbery, int> labels;  // key set: a complete prefix code

    friend bool operator==(const LabeledGenSet&, const LabeledGenSet&) =
        default;
};

struct RelElement {
    TotElement carrier;  // always reduced

    friend bool operator==(const RelElement&, const RelElement&) = default;
};

// --- labeled sets -------------------------------------------------------------

// Validates that the key set is a complete prefix code and that labels
// are >= 0.
LabeledGenSet make_labeled(const Params& p,
                           std::map<Shrubbery, int> labels);

void validate_labeled(const Params& p, const LabeledGenSet& L);

// No two keys carry the same label.
bool is_injective(const LabeledGenSet& L);

// --- relation elements ----------------------------------------------------------

RelElement rel_of(const Params& p, const TotElement& f);

RelElement rel_identity(const Params& p);

// Product in the relation monoid: the carrier of a*b is "carrier of b,
// then carrier of a".
RelElement rel_mul(const Params& p, const RelElement& a, const RelElement& b);

// (L1, L2) lies in sigma(f): every key of L2 is sent by the carrier onto
// the key of L1 carrying the same label.
bool sigma_contains(const Params& p, const RelElement& f,
                    const LabeledGenSet& L1, const LabeledGenSet& L2);

// The unique element whose sigma contains (L1, L2): each key of L2 goes
// to the L1 key with the same label. L1 must be injective and every L2
// label must occur in L1.
RelElement from_pair(const Params& p, const LabeledGenSet& L1,
                     const LabeledGenSet& L2);

// Depth of the reduced carrier.
int depth_rel(const Params& p, const RelElement& a);

// --- arrows ----------------------------------------------------------------------

// The canonical (L1, L2) presentation of an element: expand the carrier
// until its images are pairwise equal or joinless, complete the image set
// to L1 (labels 0..m-1 in sorted key order), and label each domain leaf
// by its image's label.
std::pair<LabeledGenSet, LabeledGenSet> canonical_arrow(const Params& p,
                                                        const RelElement& f);

// The L2 completing a GIVEN injective L1 to a sigma pair: descend from
// the roots, emitting (w, label) as soon as the carrier sends the cone of
// w exactly onto an L1 key. Throws when an image cone lands strictly
// inside a key or misses the key set.
LabeledGenSet pull_back(const Params& p, const RelElement& f,
                        const LabeledGenSet& L1);

// --- rendering -------------------------------------------------------------------

// Nested-bracket matrix form; only for n <= 2 and codes obtained by
// recursively splitting whole blocks in one dimension. Throws an error
// containing "not matrix-representable" otherwise.
std::string render_matrix(const Params& p, const LabeledGenSet& L);

std::string arrow_string(const Params& p, const LabeledGenSet& L1,
                         const LabeledGenSet& L2);

// Canonical arrow of f, rendered.
std::string arrow_string(const Params& p, const RelElement& f);

// --- named generating elements ----------------------------------------------------

// Splits every root into its k^n depth-1 flat children and sends each
// child back to its root.
RelElement gen_U(const Params& p);

// Splits only root 0 and only in dimension 0.
RelElement gen_U_dim0(const Params& p);

// Sends root 0 into its dimension-0 digit-0 child; identity elsewhere.
RelElement gen_pi0(const Params& p);

// Sends root rt(w) into the cone of w, where w is a depth-1 shrubbery
// with exactly one nonempty coordinate; identity elsewhere.
RelElement gen_pi_w(const Params& p, const Shrubbery& w);

// Sends root rt(s) into the cone of s, where s is a flat depth-1
// shrubbery; identity elsewhere.
RelElement gen_pi_s(const Params& p, const Shrubbery& s);

// --- right-heavy labelings ----------------------------------------------------------

// The code obtained from the roots code by i successive dimension-0
// expansions of the largest element. Size r + i*(k-1).
Code right_heavy_code(const Params& p, int i);

// The same elements in reading order: shallow to deep, leftmost first.
std::vector<Shrubbery> right_heavy_order(const Params& p, int i);

// The bijection between label tuples and right-heavy labeled sets: entry
// m of the tuple labels the m-th element in reading order. The tuple
// length must be r + i*(k-1) for some i >= 0.
LabeledGenSet labeled_from_tuple(const Params& p,
                                 const std::vector<int>& tuple);

// Inverse direction; the key set must be a right-heavy code.
std::vector<int> tuple_from_labeled(const Params& p, const LabeledGenSet& L);

// --- root-system transport ------------------------------------------------------------

// An invertible element sending the cone of from[i] onto the cone of
// to[i] for every i; the complements are matched piecewise after
// equalizing their sizes by dimension-0 expansions of the shallowest
// pieces. Throws when one complement is empty and the other is not.
TotElement cone_transport(const Params& p, const RootSystem& from,
                          const RootSystem& to);

// A one-letter word transporting the root system w onto the standard
// depth-1 system: requires w not of the standard form itself and
// depth(w) <= 2; every letter is invertible and of depth <= 3.
std::vector<RelElement> p_w_word(const Params& p, const RootSystem& w);

}  // namespace totm
