// Endomorphisms of the free algebra on r generators, and the two mutually
// inverse translations between them and total continuous maps.
//
// An endomorphism is determined by the images of the generators; applying
// it substitutes those images for the generators and renormalizes. The
// translation from a total map builds each generator image by descending
// through the address space: where the map is constant-on-a-cone it emits
// the encoded image address, elsewhere it joins the children. The inverse
// translation flattens the generator images over a flat grid deep enough
// to resolve every join and reads the resulting leaf map back as a total
// map on a flat complete code.

#pragma once

#include <vector>

#include "totm/term.hpp"
#include "totm/tot.hpp"

namespace totm {

struct Endo {
    std::vector<TermPtr> images;  // images[m] is the image of generator m
};

Endo make_endo(const Params& p, std::vector<TermPtr> images);

void validate_endo(const Params& p, const Endo& e);

Endo endo_identity(const Params& p);

// Substitute the generator images into t and normalize.
TermPtr endo_apply(const Params& p, const Endo& e, const TermPtr& t);

// First a, then b: the result maps generator m to (a(g_m)) pushed
// through b.
Endo endo_compose(const Params& p, const Endo& a, const Endo& b);

bool endo_eq(const Params& p, const Endo& a, const Endo& b);

// The term a total map assigns to the point w: the encoded image when w
// is at or below a leaf, otherwise the join, in the smallest dimension
// that makes progress toward a leaf, of the values at the children.
TermPtr phi_value(const Params& p, const TotElement& f, const Shrubbery& w);

// Total map -> endomorphism: generator m goes to phi_value at root m.
Endo phi(const Params& p, const TotElement& f);

// Endomorphism -> total map: flatten every generator image at the common
// resolution depth and read off the leaf map, then reduce.
TotElement psi(const Params& p, const Endo& e);

}  // namespace totm
