// Labeled generating sets, sigma, reversed multiplication, rendering,
// named generators, right-heavy labelings, and root-system transport.

#include "totm/rel.hpp"

#include <algorithm>
#include <utility>

#include "totm/base.hpp"
#include "totm/endo.hpp"
#include "totm/prefix_code.hpp"

namespace totm {

// --- labeled sets -------------------------------------------------------------

LabeledGenSet make_labeled(const Params& p, std::map<Shrubbery, int> labels) {
    LabeledGenSet L{std::move(labels)};
    validate_labeled(p, L);
    return L;
}

void validate_labeled(const Params& p, const LabeledGenSet& L) {
    std::vector<Shrubbery> keys;
    keys.reserve(L.labels.size());
    for (const auto& [key, label] : L.labels) {
        validate(p, key);
        if (label < 0) throw error("labeled set: negative label");
        keys.push_back(key);
    }
    if (!is_prefix_code(p, keys))
        throw error("labeled set: keys are not a prefix code");
    if (!is_complete(p, keys))
        throw error("labeled set: keys are not a complete code");
}

bool is_injective(const LabeledGenSet& L) {
    std::vector<int> labels;
    labels.reserve(L.labels.size());
    for (const auto& [key, label] : L.labels) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

// --- relation elements ----------------------------------------------------------

RelElement rel_of(const Params& p, const TotElement& f) {
    validate_tot(p, f);
    return RelElement{reduce(p, f)};
}

RelElement rel_identity(const Params& p) {
    return RelElement{tot_identity(p)};
}

RelElement rel_mul(const Params& p, const RelElement& a, const RelElement& b) {
    // The product relation pastes b's arrow before a's, so the carrier of
    // a*b is the total map "b then a".
    return RelElement{compose(p, b.carrier, a.carrier)};
}

bool sigma_contains(const Params& p, const RelElement& f,
                    const LabeledGenSet& L1, const LabeledGenSet& L2) {
    validate_labeled(p, L1);
    validate_labeled(p, L2);
    for (const auto& [key, label] : L2.labels) {
        TermPtr value = phi_value(p, f.carrier, key);
        if (!is_tower(value)) return false;
        auto it = L1.labels.find(tree_decode(p, value));
        if (it == L1.labels.end() || it->second != label) return false;
    }
    return true;
}

RelElement from_pair(const Params& p, const LabeledGenSet& L1,
                     const LabeledGenSet& L2) {
    validate_labeled(p, L1);
    validate_labeled(p, L2);
    if (!is_injective(L1))
        throw error("from pair: left labeling is not injective");
    std::map<int, Shrubbery> by_label;
    for (const auto& [key, label] : L1.labels) by_label.emplace(label, key);
    std::vector<Shrubbery> domain;
    std::vector<Shrubbery> images;
    for (const auto& [key, label] : L2.labels) {
        auto it = by_label.find(label);
        if (it == by_label.end())
            throw error("from pair: label " + std::to_string(label) +
                        " is missing from the left set");
        domain.push_back(key);
        images.push_back(it->second);
    }
    return rel_of(p, make_tot(p, std::move(domain), std::move(images)));
}

int depth_rel(const Params& p, const RelElement& a) {
    return depth_of(p, a.carrier);
}

// --- arrows ----------------------------------------------------------------------

std::pair<LabeledGenSet, LabeledGenSet> canonical_arrow(const Params& p,
                                                        const RelElement& f) {
    // Expand until the images are pairwise equal or joinless: whenever two
    // images are compatible but different, deepen the shorter one.
    TotElement g = f.carrier;
    bool stable = false;
    while (!stable) {
        stable = true;
        for (std::size_t i = 0; i < g.images.size() && stable; ++i) {
            for (std::size_t j = i + 1; j < g.images.size() && stable; ++j) {
                const Shrubbery& u = g.images[i];
                const Shrubbery& v = g.images[j];
                if (u == v || joinless(u, v)) continue;
                int d = 0;
                while (u.shrub[static_cast<std::size_t>(d)].size() ==
                       v.shrub[static_cast<std::size_t>(d)].size())
                    ++d;
                std::size_t shorter =
                    u.shrub[static_cast<std::size_t>(d)].size() <
                            v.shrub[static_cast<std::size_t>(d)].size()
                        ? i
                        : j;
                g = expand_leaf(p, g, g.domain[shorter], d);
                stable = false;
            }
        }
    }

    std::vector<Shrubbery> image_set = g.images;
    std::sort(image_set.begin(), image_set.end());
    image_set.erase(std::unique(image_set.begin(), image_set.end()),
                    image_set.end());
    Code completed = canonical_completion(p, image_set);
    std::sort(completed.begin(), completed.end());

    LabeledGenSet L1;
    for (std::size_t m = 0; m < completed.size(); ++m)
        L1.labels.emplace(completed[m], static_cast<int>(m));
    LabeledGenSet L2;
    for (std::size_t i = 0; i < g.domain.size(); ++i)
        L2.labels.emplace(g.domain[i], L1.labels.at(g.images[i]));
    return {std::move(L1), std::move(L2)};
}

namespace {

void pull_back_walk(const Params& p, const TotElement& carrier,
                    const LabeledGenSet& L1, const Shrubbery& w,
                    LabeledGenSet& out) {
    bool covered = false;
    for (const Shrubbery& leaf : carrier.domain) {
        if (leq(leaf, w)) {
            covered = true;
            break;
        }
    }
    if (!covered) {
        // The carrier still splits inside the cone of w; follow it.
        for (int d = 0; d < p.n; ++d) {
            for (const Shrubbery& leaf : carrier.domain) {
                if (compatible(leaf, w) &&
                    leaf.shrub[static_cast<std::size_t>(d)].size() >
                        w.shrub[static_cast<std::size_t>(d)].size()) {
                    for (int j = 0; j < p.k; ++j)
                        pull_back_walk(p, carrier, L1, child(w, d, j), out);
                    return;
                }
            }
        }
        throw error("pull back: no refinement resolves " + to_string(w));
    }

    Shrubbery v = eval_prefix(p, carrier, w);
    auto hit = L1.labels.find(v);
    if (hit != L1.labels.end()) {
        out.labels.emplace(w, hit->second);
        return;
    }
    for (const auto& [key, label] : L1.labels) {
        if (leq(key, v))
            throw error("pull back: the image of " + to_string(w) +
                        " lands strictly inside a key");
    }
    for (int d = 0; d < p.n; ++d) {
        for (const auto& [key, label] : L1.labels) {
            if (leq(v, key) && key.shrub[static_cast<std::size_t>(d)].size() >
                                   v.shrub[static_cast<std::size_t>(d)].size()) {
                for (int j = 0; j < p.k; ++j)
                    pull_back_walk(p, carrier, L1, child(w, d, j), out);
                return;
            }
        }
    }
    throw error("pull back: the image of " + to_string(w) +
                " misses the key set");
}

}  // namespace

LabeledGenSet pull_back(const Params& p, const RelElement& f,
                        const LabeledGenSet& L1) {
    validate_labeled(p, L1);
    if (!is_injective(L1))
        throw error("pull back: left labeling is not injective");
    LabeledGenSet out;
    for (int m = 0; m < p.r; ++m)
        pull_back_walk(p, f.carrier, L1, root_shrubbery(p, m), out);
    validate_labeled(p, out);
    return out;
}

// --- rendering -------------------------------------------------------------------

namespace {

std::string render_block(const Params& p, const LabeledGenSet& L,
                         const Shrubbery& block) {
    std::vector<std::pair<Shrubbery, int>> keys;
    for (const auto& [key, label] : L.labels)
        if (leq(block, key)) keys.emplace_back(key, label);
    if (keys.empty())
        throw error("not matrix-representable: no key covers the block " +
                    to_string(block));
    if (keys.size() == 1 && keys[0].first == block)
        return std::to_string(keys[0].second);

    auto splits_fully = [&](int d) {
        for (const auto& [key, label] : keys)
            if (key.shrub[static_cast<std::size_t>(d)].size() <=
                block.shrub[static_cast<std::size_t>(d)].size())
                return false;
        return true;
    };
    int d = -1;
    if (p.n == 1) {
        if (splits_fully(0)) d = 0;
    } else {
        if (splits_fully(1))
            d = 1;
        else if (splits_fully(0))
            d = 0;
    }
    if (d < 0)
        throw error("not matrix-representable: the block " + to_string(block) +
                    " splits in no single dimension");
    const char* sep = (p.n == 2 && d == 0) ? " " : ";";
    std::string out = "[";
    for (int j = 0; j < p.k; ++j) {
        if (j) out += sep;
        out += render_block(p, L, child(block, d, j));
    }
    out += "]";
    return out;
}

}  // namespace

std::string render_matrix(const Params& p, const LabeledGenSet& L) {
    validate_labeled(p, L);
    if (p.n > 2)
        throw error("not matrix-representable: more than two dimensions");
    std::string out;
    if (p.r >= 2) out += "(";
    for (int m = 0; m < p.r; ++m) {
        if (m) out += ", ";
        out += render_block(p, L, root_shrubbery(p, m));
    }
    if (p.r >= 2) out += ")";
    return out;
}

std::string arrow_string(const Params& p, const LabeledGenSet& L1,
                         const LabeledGenSet& L2) {
    return render_matrix(p, L1) + " -> " + render_matrix(p, L2);
}

std::string arrow_string(const Params& p, const RelElement& f) {
    auto [L1, L2] = canonical_arrow(p, f);
    return arrow_string(p, L1, L2);
}

// --- named generating elements ----------------------------------------------------

RelElement gen_U(const Params& p) {
    std::vector<Shrubbery> domain;
    std::vector<Shrubbery> images;
    for (const Shrubbery& s : flat_shrubberies(p, 1)) {
        domain.push_back(s);
        images.push_back(root_shrubbery(p, s.root));
    }
    return rel_of(p, make_tot(p, std::move(domain), std::move(images)));
}

RelElement gen_U_dim0(const Params& p) {
    std::vector<Shrubbery> domain;
    std::vector<Shrubbery> images;
    for (int j = 0; j < p.k; ++j) {
        domain.push_back(child(root_shrubbery(p, 0), 0, j));
        images.push_back(root_shrubbery(p, 0));
    }
    for (int m = 1; m < p.r; ++m) {
        domain.push_back(root_shrubbery(p, m));
        images.push_back(root_shrubbery(p, m));
    }
    return rel_of(p, make_tot(p, std::move(domain), std::move(images)));
}

namespace {

// The element sending root rt(w) into the cone of w, identity elsewhere.
RelElement root_into_cone(const Params& p, const Shrubbery& w) {
    std::vector<Shrubbery> domain;
    std::vector<Shrubbery> images;
    for (int m = 0; m < p.r; ++m) {
        domain.push_back(root_shrubbery(p, m));
        images.push_back(m == w.root ? w : root_shrubbery(p, m));
    }
    return rel_of(p, make_tot(p, std::move(domain), std::move(images)));
}

}  // namespace

RelElement gen_pi0(const Params& p) {
    return root_into_cone(p, child(root_shrubbery(p, 0), 0, 0));
}

RelElement gen_pi_w(const Params& p, const Shrubbery& w) {
    validate(p, w);
    int nonempty = 0;
    for (const Word& word : w.shrub) {
        if (word.size() > 1)
            throw error("pi generator: coordinate deeper than 1");
        nonempty += word.empty() ? 0 : 1;
    }
    if (nonempty != 1)
        throw error(
            "pi generator: expected exactly one nonempty coordinate");
    return root_into_cone(p, w);
}

RelElement gen_pi_s(const Params& p, const Shrubbery& s) {
    validate(p, s);
    for (const Word& word : s.shrub)
        if (word.size() != 1)
            throw error("pi generator: expected a flat depth-1 shrubbery");
    return root_into_cone(p, s);
}

// --- right-heavy labelings ----------------------------------------------------------

Code right_heavy_code(const Params& p, int i) {
    if (i < 0) throw error("right-heavy: negative expansion count");
    Code code;
    for (int m = 0; m < p.r; ++m) code.push_back(root_shrubbery(p, m));
    for (int step = 0; step < i; ++step)
        code = expand_code_at(p, code, code.back(), 0);
    return code;
}

std::vector<Shrubbery> right_heavy_order(const Params& p, int i) {
    std::vector<Shrubbery> order = right_heavy_code(p, i);
    std::stable_sort(order.begin(), order.end(),
                     [](const Shrubbery& a, const Shrubbery& b) {
                         int da = depth(a);
                         int db = depth(b);
                         if (da != db) return da < db;
                         return a < b;
                     });
    return order;
}

LabeledGenSet labeled_from_tuple(const Params& p,
                                 const std::vector<int>& tuple) {
    int len = static_cast<int>(tuple.size());
    if (len < p.r || (len - p.r) % (p.k - 1) != 0)
        throw error("right-heavy: tuple length must be r plus a multiple of "
                    "k-1");
    int i = (len - p.r) / (p.k - 1);
    std::vector<Shrubbery> order = right_heavy_order(p, i);
    std::map<Shrubbery, int> labels;
    for (std::size_t m = 0; m < order.size(); ++m)
        labels.emplace(order[m], tuple[m]);
    return make_labeled(p, std::move(labels));
}

std::vector<int> tuple_from_labeled(const Params& p, const LabeledGenSet& L) {
    validate_labeled(p, L);
    int len = static_cast<int>(L.labels.size());
    if (len < p.r || (len - p.r) % (p.k - 1) != 0)
        throw error("right-heavy: the key set has the wrong size");
    int i = (len - p.r) / (p.k - 1);
    Code expect = right_heavy_code(p, i);
    std::vector<Shrubbery> keys;
    keys.reserve(L.labels.size());
    for (const auto& [key, label] : L.labels) keys.push_back(key);
    if (keys != expect)
        throw error("right-heavy: the key set is not a right-heavy code");
    std::vector<int> tuple;
    for (const Shrubbery& s : right_heavy_order(p, i))
        tuple.push_back(L.labels.at(s));
    return tuple;
}

// --- root-system transport ------------------------------------------------------------

TotElement cone_transport(const Params& p, const RootSystem& from,
                          const RootSystem& to) {
    validate_root_system(p, from);
    validate_root_system(p, to);
    std::vector<Shrubbery> comp_from = canonical_complement(p, from);
    std::vector<Shrubbery> comp_to = canonical_complement(p, to);

    // Equalize the complement sizes (they agree mod k-1): repeatedly
    // replace the shallowest, then lexicographically first, piece of the
    // smaller side by its k dimension-0 children.
    auto grow = [&](std::vector<Shrubbery>& pieces) {
        if (pieces.empty())
            throw error("cone transport: complements cannot be matched");
        std::size_t best = 0;
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            int di = depth(pieces[i]);
            int db = depth(pieces[best]);
            if (di < db || (di == db && pieces[i] < pieces[best])) best = i;
        }
        Shrubbery piece = pieces[best];
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(best));
        for (int j = 0; j < p.k; ++j) pieces.push_back(child(piece, 0, j));
    };
    while (comp_from.size() != comp_to.size()) {
        if (comp_from.size() < comp_to.size())
            grow(comp_from);
        else
            grow(comp_to);
    }
    std::sort(comp_from.begin(), comp_from.end());
    std::sort(comp_to.begin(), comp_to.end());

    std::vector<Shrubbery> domain(from.begin(), from.end());
    std::vector<Shrubbery> images(to.begin(), to.end());
    domain.insert(domain.end(), comp_from.begin(), comp_from.end());
    images.insert(images.end(), comp_to.begin(), comp_to.end());
    TotElement f = make_tot(p, std::move(domain), std::move(images));
    if (!is_invertible(p, f))
        throw error("cone transport: the assembled map is not invertible");
    return f;
}

std::vector<RelElement> p_w_word(const Params& p, const RootSystem& w) {
    validate_root_system(p, w);
    if (is_standard_root_system(p, w))
        throw error("transport word: the system is already standard");
    for (const Shrubbery& s : w)
        if (depth(s) > 2)
            throw error("transport word: system deeper than 2");
    RootSystem target = standard_root_system(p, 1);
    TotElement letter = cone_transport(p, w, target);
    if (depth_of(p, letter) > 3)
        throw error("transport word: letter exceeds depth 3");
    for (int i = 0; i < p.r; ++i) {
        if (eval_prefix(p, letter, w[static_cast<std::size_t>(i)]) !=
            target[static_cast<std::size_t>(i)])
            throw error("transport word: the letter misses its target");
    }
    return {rel_of(p, letter)};
}

}  // namespace totm
