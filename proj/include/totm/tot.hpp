// Total continuous maps presented by (complete prefix code, leaf map) pairs.
//
// An element maps every point of the address space by prefix replacement:
// a point below leaf d with relative address x goes to h(d) followed by x.
// Pairs are not unique representatives, so equality goes through either a
// canonical reduction (collapse sibling leaves whose images are matching
// siblings) or a pointwise comparison over a common flat refinement. Both
// are provided; they are deliberately independent code paths.
//
// Deferment transports a map into the cones of a root system: the deferred
// map treats each cone w_i the way the original treated root i, and fixes
// everything outside the cones.

#pragma once

#include <string>
#include <vector>

#include "totm/prefix_code.hpp"
#include "totm/shrubbery.hpp"

namespace totm {

struct TotElement {
    Code domain;                    // complete prefix code, kept sorted
    std::vector<Shrubbery> images;  // images[i] is the image of domain[i]

    friend bool operator==(const TotElement&, const TotElement&) = default;
};

// An ordered r-tuple of pairwise joinless shrubberies. Order matters:
// position i plays the role of root i. It need not be complete.
using RootSystem = std::vector<Shrubbery>;

// --- construction and validation --------------------------------------------

// Sorts the pairs by leaf, validates completeness of the domain and
// validity of every image.
TotElement make_tot(const Params& p, std::vector<Shrubbery> domain,
                    std::vector<Shrubbery> images);

void validate_tot(const Params& p, const TotElement& f);

TotElement tot_identity(const Params& p);

void validate_root_system(const Params& p, const RootSystem& w);

// The root system ((0,(0^j,e,...,e)), (1,(e,...)), ..., (r-1,(e,...))).
RootSystem standard_root_system(const Params& p, int j);

// True when w equals standard_root_system(p, j) for some j >= 0.
bool is_standard_root_system(const Params& p, const RootSystem& w);

// --- evaluation and composition ----------------------------------------------

// Image of the point w: concat(h(d), x) for the unique leaf d <= w with
// relative address x. Throws when w is above every leaf (insufficient
// depth); callers descend further instead of guessing.
Shrubbery eval_prefix(const Params& p, const TotElement& f, const Shrubbery& w);

// Replace leaf a by its k children in the given dimension; the children's
// images extend a's image by the matching digit.
TotElement expand_leaf(const Params& p, const TotElement& f, const Shrubbery& a,
                       int dim);

// The map x -> (x f) g, reduced. f's leaves are expanded until each image
// lies below a unique g-leaf, then the images are pushed through g.
TotElement compose(const Params& p, const TotElement& f, const TotElement& g);

// --- canonical form and equality ----------------------------------------------

// Collapse, at the lexicographically first opportunity and to a fixpoint,
// any k sibling leaves whose images are the matching k siblings of a
// common shrubbery. The result is the unique minimal representative.
TotElement reduce(const Params& p, const TotElement& f);

// Reduction-based equality: reduce both and compare structurally.
bool tot_eq(const Params& p, const TotElement& f, const TotElement& g);

// Independent equality oracle: evaluate both maps on every flat shrubbery
// of depth max(depth f, depth g) and compare pointwise.
bool tot_eq_pointwise(const Params& p, const TotElement& f,
                      const TotElement& g);

// Depth of the reduced representative: max depth over leaves and images.
int depth_of(const Params& p, const TotElement& f);

// --- inverses ------------------------------------------------------------------

// Invertible iff the leaf map is injective and its image set is itself a
// complete prefix code.
bool is_invertible(const Params& p, const TotElement& f);

// Swaps leaves and images. Throws when not invertible.
TotElement inverse(const Params& p, const TotElement& f);

// --- deferment -----------------------------------------------------------------

// The deferment f_w: inside cone w_i the map acts as f acted on root i
// (leaves and images of reduce(f) re-rooted through w), outside all cones
// it is the identity (one leaf per canonical complement piece). The
// result is exactly this assembly, not further reduced.
TotElement deferment(const Params& p, const TotElement& f, const RootSystem& w);

// --- rendering -----------------------------------------------------------------

// "{ leaf -> image; ... }" in domain order.
std::string to_string(const Params& p, const TotElement& f);

}  // namespace totm
