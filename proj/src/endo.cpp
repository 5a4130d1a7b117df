// Endomorphisms and the translations to and from total maps.

#include "totm/endo.hpp"

#include <algorithm>

#include "totm/base.hpp"
#include "totm/prefix_code.hpp"

namespace totm {

namespace {

// Substitute images for generators, bottom-up, rebuilding joins and
// restrictions through the normalizing constructors.
TermPtr substitute(const Params& p, const Endo& e, const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Generator:
            return e.images[static_cast<std::size_t>(t->idx)];
        case Term::Kind::Alpha:
            return apply_alpha(p, substitute(p, e, t->kids[0]), t->dim,
                               t->idx);
        case Term::Kind::Lambda: {
            std::vector<TermPtr> kids;
            kids.reserve(t->kids.size());
            for (const TermPtr& kid : t->kids)
                kids.push_back(substitute(p, e, kid));
            return mk_lambda(p, t->dim, std::move(kids));
        }
    }
    throw error("endo: corrupt term");
}

}  // namespace

Endo make_endo(const Params& p, std::vector<TermPtr> images) {
    Endo e{std::move(images)};
    for (TermPtr& t : e.images) t = normalize(p, t);
    validate_endo(p, e);
    return e;
}

void validate_endo(const Params& p, const Endo& e) {
    if (static_cast<int>(e.images.size()) != p.r)
        throw error("endo: expected exactly one image per generator");
    for (const TermPtr& t : e.images) validate(p, t);
}

Endo endo_identity(const Params& p) {
    Endo e;
    for (int m = 0; m < p.r; ++m) e.images.push_back(mk_gen(m));
    return e;
}

TermPtr endo_apply(const Params& p, const Endo& e, const TermPtr& t) {
    validate_endo(p, e);
    return normalize(p, substitute(p, e, t));
}

Endo endo_compose(const Params& p, const Endo& a, const Endo& b) {
    Endo c;
    c.images.reserve(a.images.size());
    for (const TermPtr& t : a.images) c.images.push_back(endo_apply(p, b, t));
    return c;
}

bool endo_eq(const Params& p, const Endo& a, const Endo& b) {
    if (a.images.size() != b.images.size()) return false;
    for (std::size_t m = 0; m < a.images.size(); ++m)
        if (!term_eq(p, a.images[m], b.images[m])) return false;
    return true;
}

TermPtr phi_value(const Params& p, const TotElement& f, const Shrubbery& w) {
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (leq(f.domain[i], w))
            return tree_encode(p, eval_prefix(p, f, w));
    }
    // No leaf at or above w: split in the smallest dimension along which
    // some compatible leaf still goes deeper, so every recursive call
    // strictly shrinks the total remaining distance to the leaves.
    int split_dim = -1;
    for (int d = 0; d < p.n && split_dim < 0; ++d) {
        for (const Shrubbery& c : f.domain) {
            if (compatible(c, w) && c.shrub[d].size() > w.shrub[d].size()) {
                split_dim = d;
                break;
            }
        }
    }
    if (split_dim < 0)
        throw error("phi: no refinement resolves " + to_string(w));
    std::vector<TermPtr> kids;
    kids.reserve(static_cast<std::size_t>(p.k));
    for (int j = 0; j < p.k; ++j)
        kids.push_back(phi_value(p, f, child(w, split_dim, j)));
    return mk_lambda(p, split_dim, std::move(kids));
}

Endo phi(const Params& p, const TotElement& f) {
    validate_tot(p, f);
    Endo e;
    for (int m = 0; m < p.r; ++m)
        e.images.push_back(
            normalize(p, phi_value(p, f, root_shrubbery(p, m))));
    return e;
}

TotElement psi(const Params& p, const Endo& e) {
    validate_endo(p, e);
    int N = 0;
    std::vector<TermPtr> norm;
    for (const TermPtr& t : e.images) {
        norm.push_back(normalize(p, t));
        N = std::max(N, resolution_depth(norm.back()));
    }
    TotElement f;
    for (int m = 0; m < p.r; ++m) {
        for (const auto& [addr, img] :
             flatten(p, norm[static_cast<std::size_t>(m)], N)) {
            f.domain.push_back(Shrubbery{m, addr});
            f.images.push_back(img);
        }
    }
    return reduce(p, make_tot(p, std::move(f.domain), std::move(f.images)));
}

}  // namespace totm
