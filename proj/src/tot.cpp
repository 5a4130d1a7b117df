// Total continuous maps: evaluation, composition, reduction, deferment.

#include "totm/tot.hpp"

#include <algorithm>
#include <utility>

#include "totm/base.hpp"

namespace totm {

namespace {

// Sort pairs by leaf and rebuild the two parallel vectors.
void sort_pairs(TotElement& f) {
    std::vector<std::pair<Shrubbery, Shrubbery>> pairs;
    pairs.reserve(f.domain.size());
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        pairs.emplace_back(f.domain[i], f.images[i]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        f.domain[i] = std::move(pairs[i].first);
        f.images[i] = std::move(pairs[i].second);
    }
}

}  // namespace

TotElement make_tot(const Params& p, std::vector<Shrubbery> domain,
                    std::vector<Shrubbery> images) {
    if (domain.size() != images.size())
        throw error("tot: domain and image lists differ in length");
    TotElement f{std::move(domain), std::move(images)};
    sort_pairs(f);
    validate_tot(p, f);
    return f;
}

void validate_tot(const Params& p, const TotElement& f) {
    if (f.domain.size() != f.images.size())
        throw error("tot: domain and image lists differ in length");
    for (const Shrubbery& s : f.domain) validate(p, s);
    for (const Shrubbery& s : f.images) validate(p, s);
    if (!std::is_sorted(f.domain.begin(), f.domain.end()))
        throw error("tot: domain is not sorted");
    if (!is_prefix_code(p, f.domain))
        throw error("tot: domain is not a prefix code");
    if (!is_complete(p, f.domain)) throw error("tot: domain is not complete");
}

TotElement tot_identity(const Params& p) {
    TotElement f;
    for (int m = 0; m < p.r; ++m) {
        f.domain.push_back(root_shrubbery(p, m));
        f.images.push_back(root_shrubbery(p, m));
    }
    return f;
}

void validate_root_system(const Params& p, const RootSystem& w) {
    if (static_cast<int>(w.size()) != p.r)
        throw error("root system: expected exactly one shrubbery per root");
    for (const Shrubbery& s : w) validate(p, s);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (compatible(w[i], w[j]))
                throw error("root system: elements are not pairwise joinless");
}

RootSystem standard_root_system(const Params& p, int j) {
    if (j < 0) throw error("root system: negative index");
    RootSystem w;
    for (int m = 0; m < p.r; ++m) w.push_back(root_shrubbery(p, m));
    w[0].shrub[0].assign(static_cast<std::size_t>(j), 0);
    return w;
}

bool is_standard_root_system(const Params& p, const RootSystem& w) {
    if (static_cast<int>(w.size()) != p.r) return false;
    for (int m = 1; m < p.r; ++m)
        if (w[m] != root_shrubbery(p, m)) return false;
    if (w[0].root != 0) return false;
    for (int d = 1; d < p.n; ++d)
        if (!w[0].shrub[d].empty()) return false;
    for (std::uint8_t digit : w[0].shrub[0])
        if (digit != 0) return false;
    return true;
}

Shrubbery eval_prefix(const Params& p, const TotElement& f,
                      const Shrubbery& w) {
    validate(p, w);
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (leq(f.domain[i], w))
            return concat(f.images[i], suffix_of(f.domain[i], w));
    }
    throw error("eval: the point " + to_string(w) +
                " lies above every leaf of the domain");
}

TotElement expand_leaf(const Params& p, const TotElement& f, const Shrubbery& a,
                       int dim) {
    if (dim < 0 || dim >= p.n) throw error("expand: dimension out of range");
    auto it = std::find(f.domain.begin(), f.domain.end(), a);
    if (it == f.domain.end())
        throw error("expand: " + to_string(a) + " is not a leaf of the domain");
    std::size_t idx = static_cast<std::size_t>(it - f.domain.begin());
    TotElement g;
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (i == idx) {
            for (int j = 0; j < p.k; ++j) {
                g.domain.push_back(child(f.domain[i], dim, j));
                g.images.push_back(child(f.images[i], dim, j));
            }
        } else {
            g.domain.push_back(f.domain[i]);
            g.images.push_back(f.images[i]);
        }
    }
    sort_pairs(g);
    return g;
}

TotElement compose(const Params& p, const TotElement& f, const TotElement& g) {
    // Push each leaf of f through g, expanding f's leaves until their images
    // reach below a leaf of g. Termination: the chosen dimension strictly
    // shrinks the depth gap to some compatible g-leaf.
    std::vector<std::pair<Shrubbery, Shrubbery>> work;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        work.emplace_back(f.domain[i], f.images[i]);
    TotElement h;
    while (!work.empty()) {
        auto [leaf, v] = work.back();
        work.pop_back();
        bool resolved = false;
        for (std::size_t j = 0; j < g.domain.size(); ++j) {
            if (leq(g.domain[j], v)) {
                h.domain.push_back(leaf);
                h.images.push_back(concat(g.images[j], suffix_of(g.domain[j], v)));
                resolved = true;
                break;
            }
        }
        if (resolved) continue;
        int split_dim = -1;
        for (int d = 0; d < p.n && split_dim < 0; ++d) {
            for (const Shrubbery& c : g.domain) {
                if (compatible(c, v) &&
                    c.shrub[d].size() > v.shrub[d].size()) {
                    split_dim = d;
                    break;
                }
            }
        }
        if (split_dim < 0)
            throw error("compose: no refinement resolves " + to_string(v));
        for (int j = 0; j < p.k; ++j)
            work.emplace_back(child(leaf, split_dim, j),
                              child(v, split_dim, j));
    }
    sort_pairs(h);
    return reduce(p, h);
}

TotElement reduce(const Params& p, const TotElement& f) {
    std::vector<std::pair<Shrubbery, Shrubbery>> pairs;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        pairs.emplace_back(f.domain[i], f.images[i]);
    std::sort(pairs.begin(), pairs.end());

    // Repeatedly collapse the first collapsible family in (leaf, dimension)
    // order: k sibling leaves child(q, d, 0..k-1) whose images are the
    // matching siblings child(u, d, 0..k-1) become the single pair (q, u).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pairs.size() && !changed; ++i) {
            for (int d = 0; d < p.n && !changed; ++d) {
                const Shrubbery& a = pairs[i].first;
                const Shrubbery& v = pairs[i].second;
                if (a.shrub[d].empty() || a.shrub[d].back() != 0) continue;
                if (v.shrub[d].empty() || v.shrub[d].back() != 0) continue;
                Shrubbery q = a;
                q.shrub[d].pop_back();
                Shrubbery u = v;
                u.shrub[d].pop_back();
                bool all = true;
                std::vector<std::size_t> members;
                for (int j = 0; all && j < p.k; ++j) {
                    std::pair<Shrubbery, Shrubbery> want{child(q, d, j),
                                                         child(u, d, j)};
                    auto it = std::lower_bound(pairs.begin(), pairs.end(), want);
                    if (it == pairs.end() || *it != want)
                        all = false;
                    else
                        members.push_back(
                            static_cast<std::size_t>(it - pairs.begin()));
                }
                if (!all) continue;
                std::sort(members.rbegin(), members.rend());
                for (std::size_t m : members)
                    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(m));
                std::pair<Shrubbery, Shrubbery> merged{q, u};
                pairs.insert(std::lower_bound(pairs.begin(), pairs.end(), merged),
                             merged);
                changed = true;
            }
        }
    }

    TotElement g;
    for (auto& pr : pairs) {
        g.domain.push_back(std::move(pr.first));
        g.images.push_back(std::move(pr.second));
    }
    return g;
}

bool tot_eq(const Params& p, const TotElement& f, const TotElement& g) {
    return reduce(p, f) == reduce(p, g);
}

bool tot_eq_pointwise(const Params& p, const TotElement& f,
                      const TotElement& g) {
    int d = 0;
    for (const Shrubbery& s : f.domain) d = std::max(d, depth(s));
    for (const Shrubbery& s : g.domain) d = std::max(d, depth(s));
    for (const Shrubbery& s : flat_shrubberies(p, d)) {
        if (eval_prefix(p, f, s) != eval_prefix(p, g, s)) return false;
    }
    return true;
}

int depth_of(const Params& p, const TotElement& f) {
    TotElement g = reduce(p, f);
    int d = 0;
    for (const Shrubbery& s : g.domain) d = std::max(d, depth(s));
    for (const Shrubbery& s : g.images) d = std::max(d, depth(s));
    return d;
}

bool is_invertible(const Params& p, const TotElement& f) {
    std::vector<Shrubbery> imgs = f.images;
    std::sort(imgs.begin(), imgs.end());
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end())
        return false;
    if (!is_prefix_code(p, imgs)) return false;
    return is_complete(p, imgs);
}

TotElement inverse(const Params& p, const TotElement& f) {
    if (!is_invertible(p, f))
        throw error("inverse: the image leaves do not form a complete code");
    TotElement g{f.images, f.domain};
    sort_pairs(g);
    return reduce(p, g);
}

TotElement deferment(const Params& p, const TotElement& f,
                     const RootSystem& w) {
    validate_root_system(p, w);
    TotElement base = reduce(p, f);
    TotElement g;
    // Inside cone w_i the map repeats what f did on root i: the pair
    // ((i,s) -> (m,t)) becomes (concat(w_i, s) -> concat(w_m, t)).
    for (std::size_t i = 0; i < base.domain.size(); ++i) {
        const Shrubbery& leaf = base.domain[i];
        const Shrubbery& img = base.images[i];
        g.domain.push_back(concat(w[static_cast<std::size_t>(leaf.root)],
                                  leaf.shrub));
        g.images.push_back(concat(w[static_cast<std::size_t>(img.root)],
                                  img.shrub));
    }
    for (const Shrubbery& q : canonical_complement(p, w)) {
        g.domain.push_back(q);
        g.images.push_back(q);
    }
    sort_pairs(g);
    validate_tot(p, g);
    return g;
}

std::string to_string(const Params& p, const TotElement& f) {
    (void)p;
    std::string out = "{ ";
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (i) out += "; ";
        out += to_string(f.domain[i]);
        out += " -> ";
        out += to_string(f.images[i]);
    }
    out += " }";
    return out;
}

}  // namespace totm
