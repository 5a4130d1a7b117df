#include "totm/term.hpp"

#include <algorithm>

namespace totm {

TermPtr mk_gen(int i) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Generator;
    t->idx = i;
    return t;
}

TermPtr mk_alpha_raw(int dim, int digit, TermPtr kid) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Alpha;
    t->dim = dim;
    t->idx = digit;
    t->kids.push_back(std::move(kid));
    return t;
}

TermPtr mk_lambda_raw(int dim, std::vector<TermPtr> kids) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Lambda;
    t->dim = dim;
    t->kids = std::move(kids);
    return t;
}

void validate(const Params& p, const TermPtr& t) {
    if (!t) throw error("term: null");
    switch (t->kind) {
        case Term::Kind::Generator:
            if (t->idx < 0 || t->idx >= p.r)
                throw error("term: generator index out of range");
            if (!t->kids.empty()) throw error("term: generator with children");
            break;
        case Term::Kind::Alpha:
            if (t->dim < 0 || t->dim >= p.n)
                throw error("term: restriction dimension out of range");
            if (t->idx < 0 || t->idx >= p.k)
                throw error("term: restriction digit out of range");
            if (t->kids.size() != 1)
                throw error("term: restriction arity must be 1");
            validate(p, t->kids[0]);
            break;
        case Term::Kind::Lambda:
            if (t->dim < 0 || t->dim >= p.n)
                throw error("term: join dimension out of range");
            if (t->kids.size() != static_cast<std::size_t>(p.k))
                throw error("term: join arity must be k");
            for (const TermPtr& c : t->kids) validate(p, c);
            break;
    }
}

bool term_identical(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->dim != b->dim || a->idx != b->idx ||
        a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!term_identical(a->kids[i], b->kids[i])) return false;
    return true;
}

namespace {

// Remove one outermost "then a<dim>_<digit>" factor, commuting it out past
// other dimensions. Returns null when the pattern is absent. The caller
// verifies the candidate by re-application, so this only needs to be sound
// on the shapes normalize produces.
TermPtr strip_alpha(const Params& p, const TermPtr& t, int dim, int digit) {
    switch (t->kind) {
        case Term::Kind::Generator:
            return nullptr;
        case Term::Kind::Alpha:
            if (t->dim == dim)
                return t->idx == digit ? t->kids[0] : nullptr;
            if (t->dim > dim) {
                TermPtr inner = strip_alpha(p, t->kids[0], dim, digit);
                return inner ? mk_alpha_raw(t->dim, t->idx, inner) : nullptr;
            }
            return nullptr;  // sorted tower: no dim-d factor further out
        case Term::Kind::Lambda: {
            if (t->dim == dim) return nullptr;
            std::vector<TermPtr> kids;
            kids.reserve(t->kids.size());
            for (const TermPtr& c : t->kids) {
                TermPtr s = strip_alpha(p, c, dim, digit);
                if (!s) return nullptr;
                kids.push_back(std::move(s));
            }
            return mk_lambda(p, t->dim, std::move(kids));
        }
    }
    return nullptr;
}

}  // namespace

TermPtr apply_alpha(const Params& p, const TermPtr& t, int dim, int digit) {
    if (dim < 0 || dim >= p.n || digit < 0 || digit >= p.k)
        throw error("apply_alpha: dimension or digit out of range");
    if (t->kind == Term::Kind::Lambda) {
        if (t->dim == dim) return t->kids[static_cast<std::size_t>(digit)];
        std::vector<TermPtr> kids;
        kids.reserve(t->kids.size());
        for (const TermPtr& c : t->kids) kids.push_back(apply_alpha(p, c, dim, digit));
        return mk_lambda(p, t->dim, std::move(kids));
    }
    if (t->kind == Term::Kind::Alpha && t->dim > dim)
        return mk_alpha_raw(t->dim, t->idx,
                            apply_alpha(p, t->kids[0], dim, digit));
    return mk_alpha_raw(dim, digit, t);
}

TermPtr mk_lambda(const Params& p, int dim, std::vector<TermPtr> kids) {
    if (kids.size() != static_cast<std::size_t>(p.k))
        throw error("mk_lambda: join arity must be k");
    TermPtr x = strip_alpha(p, kids[0], dim, 0);
    if (x) {
        bool all = true;
        for (int l = 0; l < p.k; ++l)
            if (!term_identical(kids[static_cast<std::size_t>(l)],
                                apply_alpha(p, x, dim, l))) {
                all = false;
                break;
            }
        if (all) return x;
    }
    return mk_lambda_raw(dim, std::move(kids));
}

TermPtr normalize(const Params& p, const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Generator:
            return t;
        case Term::Kind::Alpha:
            return apply_alpha(p, normalize(p, t->kids[0]), t->dim, t->idx);
        case Term::Kind::Lambda: {
            std::vector<TermPtr> kids;
            kids.reserve(t->kids.size());
            for (const TermPtr& c : t->kids) kids.push_back(normalize(p, c));
            return mk_lambda(p, t->dim, std::move(kids));
        }
    }
    throw error("normalize: bad term");
}

int lambda_count(const TermPtr& t) {
    int c = t->kind == Term::Kind::Lambda ? 1 : 0;
    for (const TermPtr& k : t->kids) c += lambda_count(k);
    return c;
}

namespace {

void nesting(const TermPtr& t, std::vector<int>& out) {
    switch (t->kind) {
        case Term::Kind::Generator:
            std::fill(out.begin(), out.end(), 0);
            return;
        case Term::Kind::Alpha:
            nesting(t->kids[0], out);
            return;
        case Term::Kind::Lambda: {
            std::vector<int> acc(out.size(), 0), tmp(out.size(), 0);
            for (const TermPtr& c : t->kids) {
                nesting(c, tmp);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    acc[i] = std::max(acc[i], tmp[i]);
            }
            acc[static_cast<std::size_t>(t->dim)] += 1;
            out = std::move(acc);
            return;
        }
    }
}

}  // namespace

int resolution_depth(const TermPtr& t) {
    // upper bound on the dimension index present
    int maxdim = 0;
    std::vector<const Term*> stack{t.get()};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        maxdim = std::max(maxdim, cur->dim + 1);
        for (const TermPtr& c : cur->kids) stack.push_back(c.get());
    }
    std::vector<int> nest(static_cast<std::size_t>(std::max(maxdim, 1)), 0);
    nesting(t, nest);
    return *std::max_element(nest.begin(), nest.end());
}

bool is_tower(const TermPtr& t) {
    const Term* cur = t.get();
    while (cur->kind == Term::Kind::Alpha) cur = cur->kids[0].get();
    return cur->kind == Term::Kind::Generator;
}

TermPtr tree_encode(const Params& p, const Shrubbery& s) {
    validate(p, s);
    TermPtr t = mk_gen(s.root);
    for (int i = 0; i < p.n; ++i)
        for (std::uint8_t d : s.shrub[static_cast<std::size_t>(i)])
            t = mk_alpha_raw(i, d, std::move(t));
    return t;
}

Shrubbery tree_decode(const Params& p, const TermPtr& t) {
    Shrub shrub(static_cast<std::size_t>(p.n));
    const Term* cur = t.get();
    while (cur->kind == Term::Kind::Alpha) {
        if (cur->dim < 0 || cur->dim >= p.n)
            throw error("tree_decode: dimension out of range");
        shrub[static_cast<std::size_t>(cur->dim)].push_back(
            static_cast<std::uint8_t>(cur->idx));
        cur = cur->kids[0].get();
    }
    if (cur->kind != Term::Kind::Generator)
        throw error("tree_decode: term is not a restriction tower");
    // walking outside-in yields each word last-applied-first
    for (Word& w : shrub) std::reverse(w.begin(), w.end());
    Shrubbery out{cur->idx, std::move(shrub)};
    validate(p, out);
    return out;
}

namespace {

void flatten_rec(const Params& p, const TermPtr& t, int N, int dim,
                 Shrub& addr, std::map<Shrub, Shrubbery>& out) {
    if (dim == p.n) {
        if (!is_tower(t))
            throw error("flatten: residual join after resolution (depth too small)");
        out.emplace(addr, tree_decode(p, t));
        return;
    }
    auto di = static_cast<std::size_t>(dim);
    if (static_cast<int>(addr[di].size()) == N) {
        flatten_rec(p, t, N, dim + 1, addr, out);
        return;
    }
    for (int j = 0; j < p.k; ++j) {
        addr[di].push_back(static_cast<std::uint8_t>(j));
        flatten_rec(p, apply_alpha(p, t, dim, j), N, dim, addr, out);
        addr[di].pop_back();
    }
}

std::map<Shrub, Shrubbery> flatten_normalized(const Params& p, const TermPtr& t,
                                              int N) {
    if (N < resolution_depth(t))
        throw error("flatten: residual join after resolution (depth too small)");
    double cells = 1.0;
    for (int i = 0; i < p.n * N; ++i) cells *= p.k;
    if (cells > double(1u << 20)) throw error("flatten: grid too large");
    std::map<Shrub, Shrubbery> out;
    Shrub addr(static_cast<std::size_t>(p.n));
    flatten_rec(p, t, N, 0, addr, out);
    return out;
}

}  // namespace

std::map<Shrub, Shrubbery> flatten(const Params& p, const TermPtr& t, int N) {
    validate(p, t);
    return flatten_normalized(p, normalize(p, t), N);
}

bool term_eq(const Params& p, const TermPtr& a, const TermPtr& b) {
    validate(p, a);
    validate(p, b);
    TermPtr na = normalize(p, a), nb = normalize(p, b);
    if (term_identical(na, nb)) return true;
    const int N = std::max(resolution_depth(na), resolution_depth(nb));
    return flatten_normalized(p, na, N) == flatten_normalized(p, nb, N);
}

std::string to_string(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Generator:
            return "g" + std::to_string(t->idx);
        case Term::Kind::Alpha:
            return "a" + std::to_string(t->dim) + "_" + std::to_string(t->idx) +
                   "(" + to_string(t->kids[0]) + ")";
        case Term::Kind::Lambda: {
            std::string s = "l" + std::to_string(t->dim) + "(";
            for (std::size_t i = 0; i < t->kids.size(); ++i) {
                if (i) s += ",";
                s += to_string(t->kids[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

}  // namespace totm
