#include "totm/prefix_code.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace totm {

Code make_code(const Params& p, std::vector<Shrubbery> elems) {
    for (const Shrubbery& s : elems) validate(p, s);
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw error("code: duplicate element");
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (compatible(elems[i], elems[j]))
                throw error("code: elements " + to_string(elems[i]) + " and " +
                            to_string(elems[j]) + " are not joinless");
    return elems;
}

bool is_prefix_code(const Params& p, const std::vector<Shrubbery>& elems) {
    try {
        make_code(p, elems);
        return true;
    } catch (const error&) {
        return false;
    }
}

bool is_complete(const Params& p, const Code& code) {
    if (code.empty()) return false;
    int d = 0;
    for (const Shrubbery& c : code) d = std::max(d, depth(c));
    for (const Shrubbery& cell : flat_shrubberies(p, d)) {
        int hits = 0;
        for (const Shrubbery& c : code)
            if (leq(c, cell)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

ShrubberyMultiset elementary_expansion(const Params& p,
                                       const ShrubberyMultiset& M,
                                       const Shrubbery& a, int dim) {
    if (dim < 0 || dim >= p.n) throw error("expansion: dimension out of range");
    auto it = M.find(a);
    if (it == M.end())
        throw error("expansion: element " + to_string(a) + " not in multiset");
    ShrubberyMultiset out = M;
    if (--out[a] == 0) out.erase(a);
    for (int j = 0; j < p.k; ++j) ++out[child(a, dim, j)];
    return out;
}

Code expand_code_at(const Params& p, const Code& code, const Shrubbery& a,
                    int dim) {
    ShrubberyMultiset m;
    for (const Shrubbery& c : code) ++m[c];
    ShrubberyMultiset expanded = elementary_expansion(p, m, a, dim);
    Code out;
    out.reserve(code.size() + static_cast<std::size_t>(p.k) - 1);
    for (const auto& [s, count] : expanded) {
        if (count != 1) throw error("expansion: result has a duplicate element");
        out.push_back(s);
    }
    return out;
}

std::vector<Shrubbery> pst(const Params& p, const Code& code) {
    if (!is_complete(p, code)) throw error("pst: code is not complete");
    std::set<Shrubbery> nodes;
    for (const Shrubbery& c : code) {
        // all coordinatewise prefixes
        std::vector<Shrub> partial{Shrub{}};
        for (int i = 0; i < p.n; ++i) {
            std::vector<Shrub> next;
            const Word& w = c.shrub[static_cast<std::size_t>(i)];
            for (const Shrub& pre : partial)
                for (std::size_t len = 0; len <= w.size(); ++len) {
                    Shrub q = pre;
                    q.emplace_back(w.begin(),
                                   w.begin() + static_cast<std::ptrdiff_t>(len));
                    next.push_back(std::move(q));
                }
            partial = std::move(next);
        }
        for (Shrub& s : partial) nodes.insert(Shrubbery{c.root, std::move(s)});
    }
    return {nodes.begin(), nodes.end()};
}

std::vector<std::pair<Shrubbery, std::vector<Shrubbery>>> expand_to_flat(
    const Params& p, const Code& code, int N) {
    if (!is_complete(p, code)) throw error("expand_to_flat: code is not complete");
    int d = 0;
    for (const Shrubbery& c : code) d = std::max(d, depth(c));
    if (N < d) throw error("expand_to_flat: depth smaller than the code's");
    std::vector<std::pair<Shrubbery, std::vector<Shrubbery>>> out;
    out.reserve(code.size());
    for (const Shrubbery& c : code) {
        std::vector<Shrubbery> above;
        for (const Shrub& t : flat_extensions(p, c, N))
            above.push_back(concat(c, t));
        std::sort(above.begin(), above.end());
        out.emplace_back(c, std::move(above));
    }
    return out;
}

std::vector<Shrub> flat_extensions(const Params& p, const Shrubbery& c, int d) {
    for (const Word& w : c.shrub)
        if (static_cast<int>(w.size()) > d)
            throw error("flat_extensions: element deeper than target depth");
    std::vector<Shrub> out{Shrub{}};
    for (int i = 0; i < p.n; ++i) {
        const auto need = static_cast<std::size_t>(d) -
                          c.shrub[static_cast<std::size_t>(i)].size();
        std::vector<Word> words{Word{}};
        for (std::size_t step = 0; step < need; ++step) {
            std::vector<Word> grown;
            grown.reserve(words.size() * static_cast<std::size_t>(p.k));
            for (const Word& w : words)
                for (int j = 0; j < p.k; ++j) {
                    Word v = w;
                    v.push_back(static_cast<std::uint8_t>(j));
                    grown.push_back(std::move(v));
                }
            words = std::move(grown);
        }
        std::vector<Shrub> next;
        next.reserve(out.size() * words.size());
        for (const Shrub& s : out)
            for (const Word& w : words) {
                Shrub q = s;
                q.push_back(w);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

namespace {

struct CoverState {
    const Params* p;
    int depth;
    std::vector<Shrubbery> grid;                 // flat cells, sorted
    std::map<Shrubbery, std::size_t> cell_index;
    std::vector<char> covered;
    std::vector<Shrubbery> chosen;
    std::vector<Code> result;

    std::vector<std::size_t> cells_of(const Shrubbery& cone) const {
        std::vector<std::size_t> out;
        for (const Shrub& t : flat_extensions(*p, cone, depth))
            out.push_back(cell_index.at(concat(cone, t)));
        return out;
    }

    void search() {
        std::size_t cell = 0;
        while (cell < grid.size() && covered[cell]) ++cell;
        if (cell == grid.size()) {
            Code code = chosen;
            std::sort(code.begin(), code.end());
            result.push_back(std::move(code));
            return;
        }
        // candidates: every cone containing this cell, i.e. every
        // coordinatewise prefix of the cell
        const Shrubbery& target = grid[cell];
        std::vector<Shrubbery> cands;
        std::vector<Shrub> partial{Shrub{}};
        for (int i = 0; i < p->n; ++i) {
            std::vector<Shrub> next;
            const Word& w = target.shrub[static_cast<std::size_t>(i)];
            for (const Shrub& pre : partial)
                for (std::size_t len = 0; len <= w.size(); ++len) {
                    Shrub q = pre;
                    q.emplace_back(w.begin(),
                                   w.begin() + static_cast<std::ptrdiff_t>(len));
                    next.push_back(std::move(q));
                }
            partial = std::move(next);
        }
        for (Shrub& s : partial) cands.push_back(Shrubbery{target.root, std::move(s)});
        std::sort(cands.begin(), cands.end());

        for (const Shrubbery& cand : cands) {
            std::vector<std::size_t> cells = cells_of(cand);
            bool free = true;
            for (std::size_t ci : cells)
                if (covered[ci]) { free = false; break; }
            if (!free) continue;
            for (std::size_t ci : cells) covered[ci] = 1;
            chosen.push_back(cand);
            search();
            chosen.pop_back();
            for (std::size_t ci : cells) covered[ci] = 0;
        }
    }
};

}  // namespace

std::vector<Code> enumerate_complete_codes(const Params& p, int max_depth) {
    check_params(p);
    if (max_depth < 0 || max_depth > 3)
        throw error("enumerate_complete_codes: max_depth must be in 0..3");
    CoverState st;
    st.p = &p;
    st.depth = max_depth;
    st.grid = flat_shrubberies(p, max_depth);
    for (std::size_t i = 0; i < st.grid.size(); ++i) st.cell_index[st.grid[i]] = i;
    st.covered.assign(st.grid.size(), 0);
    st.search();
    std::sort(st.result.begin(), st.result.end());
    return st.result;
}

std::vector<Shrubbery> canonical_complement(const Params& p,
                                            const std::vector<Shrubbery>& pieces) {
    for (const Shrubbery& s : pieces) validate(p, s);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (compatible(pieces[i], pieces[j]))
                throw error("complement: pieces are not joinless");

    std::vector<Shrubbery> out;
    std::vector<Shrubbery> queue;
    for (int m = p.r; m-- > 0;) queue.push_back(root_shrubbery(p, m));
    while (!queue.empty()) {
        Shrubbery q = queue.back();
        queue.pop_back();
        bool dropped = false, conflict = false;
        int split_dim = -1;
        for (const Shrubbery& w : pieces) {
            if (leq(w, q)) { dropped = true; break; }
            if (compatible(w, q)) {
                conflict = true;
                for (int d = 0; d < p.n; ++d) {
                    auto di = static_cast<std::size_t>(d);
                    if (w.shrub[di].size() > q.shrub[di].size()) {
                        if (split_dim < 0 || d < split_dim) split_dim = d;
                        break;
                    }
                }
            }
        }
        if (dropped) continue;
        if (!conflict) {
            out.push_back(q);
            continue;
        }
        // compatible but not above any piece: some dimension is deficient
        for (int j = p.k; j-- > 0;) queue.push_back(child(q, split_dim, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Code canonical_completion(const Params& p, const std::vector<Shrubbery>& P) {
    for (const Shrubbery& s : P) validate(p, s);
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
            if (compatible(P[i], P[j]))
                throw error("completion: given set is not joinless");

    Code out;
    std::vector<Shrubbery> queue;
    for (int m = p.r; m-- > 0;) queue.push_back(root_shrubbery(p, m));
    while (!queue.empty()) {
        Shrubbery q = queue.back();
        queue.pop_back();
        bool emitted = false;
        std::vector<const Shrubbery*> below;  // elements of P strictly under q
        for (const Shrubbery& w : P) {
            if (w == q) {
                out.push_back(q);
                emitted = true;
                break;
            }
            if (compatible(w, q)) {
                if (leq(w, q))
                    throw error("completion: internal descent past an element");
                below.push_back(&w);
            }
        }
        if (emitted) continue;
        if (below.empty()) {
            out.push_back(q);
            continue;
        }
        int split_dim = -1;
        for (int d = 0; d < p.n && split_dim < 0; ++d) {
            auto di = static_cast<std::size_t>(d);
            bool ok = true;
            for (const Shrubbery* w : below)
                if (w->shrub[di].size() <= q.shrub[di].size()) { ok = false; break; }
            if (ok) split_dim = d;
        }
        if (split_dim < 0)
            throw error("completion: no grid refinement contains the given set");
        for (int j = p.k; j-- > 0;) queue.push_back(child(q, split_dim, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace totm
