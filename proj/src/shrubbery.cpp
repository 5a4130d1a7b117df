#include "totm/shrubbery.hpp"

#include <algorithm>

namespace totm {

bool word_is_prefix(const Word& p, const Word& w) {
    if (p.size() > w.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin());
}

Word word_suffix(const Word& p, const Word& w) {
    if (!word_is_prefix(p, w)) throw error("word_suffix: not a prefix");
    return Word(w.begin() + static_cast<std::ptrdiff_t>(p.size()), w.end());
}

Shrubbery root_shrubbery(const Params& p, int root) {
    if (root < 0 || root >= p.r) throw error("root index out of range");
    return Shrubbery{root, Shrub(static_cast<std::size_t>(p.n))};
}

void validate(const Params& p, const Shrubbery& s) {
    check_params(p);
    if (s.root < 0 || s.root >= p.r)
        throw error("shrubbery: root " + std::to_string(s.root) +
                    " out of range for r=" + std::to_string(p.r));
    if (static_cast<int>(s.shrub.size()) != p.n)
        throw error("shrubbery: expected " + std::to_string(p.n) +
                    " coordinate words, got " + std::to_string(s.shrub.size()));
    for (const Word& w : s.shrub)
        for (std::uint8_t d : w)
            if (d >= p.k)
                throw error("shrubbery: digit " + std::to_string(int(d)) +
                            " out of range for k=" + std::to_string(p.k));
}

int depth(const Shrub& s) {
    std::size_t m = 0;
    for (const Word& w : s) m = std::max(m, w.size());
    return static_cast<int>(m);
}

int depth(const Shrubbery& s) { return depth(s.shrub); }

bool is_flat(const Shrub& s) {
    for (const Word& w : s)
        if (w.size() != s.front().size()) return false;
    return true;
}

bool is_flat(const Shrubbery& s) { return s.shrub.empty() || is_flat(s.shrub); }

Shrub concat(const Shrub& s, const Shrub& t) {
    if (s.size() != t.size()) throw error("concat: arity mismatch");
    Shrub out = s;
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i].insert(out[i].end(), t[i].begin(), t[i].end());
    return out;
}

Shrubbery concat(const Shrubbery& s, const Shrub& t) {
    return Shrubbery{s.root, concat(s.shrub, t)};
}

bool leq(const Shrubbery& u, const Shrubbery& v) {
    if (u.root != v.root || u.shrub.size() != v.shrub.size()) return false;
    for (std::size_t i = 0; i < u.shrub.size(); ++i)
        if (!word_is_prefix(u.shrub[i], v.shrub[i])) return false;
    return true;
}

Shrub suffix_of(const Shrubbery& u, const Shrubbery& v) {
    if (!leq(u, v)) throw error("suffix_of: first argument is not below second");
    Shrub out(u.shrub.size());
    for (std::size_t i = 0; i < u.shrub.size(); ++i)
        out[i] = word_suffix(u.shrub[i], v.shrub[i]);
    return out;
}

bool compatible(const Shrubbery& u, const Shrubbery& v) {
    if (u.root != v.root || u.shrub.size() != v.shrub.size()) return false;
    for (std::size_t i = 0; i < u.shrub.size(); ++i)
        if (!word_is_prefix(u.shrub[i], v.shrub[i]) &&
            !word_is_prefix(v.shrub[i], u.shrub[i]))
            return false;
    return true;
}

Shrubbery child(const Shrubbery& s, int dim, int j) {
    Shrubbery out = s;
    out.shrub.at(static_cast<std::size_t>(dim))
        .push_back(static_cast<std::uint8_t>(j));
    return out;
}

std::vector<Shrub> flat_shrubs(const Params& p, int d) {
    if (d < 0) throw error("flat_shrubs: negative depth");
    const std::size_t total = static_cast<std::size_t>(p.n) *
                              static_cast<std::size_t>(d);
    // Count digit strings of length n*d in mixed radix k; split into words.
    double est = 1.0;
    for (std::size_t i = 0; i < total; ++i) est *= p.k;
    if (est > double(1u << 20)) throw error("flat_shrubs: enumeration too large");

    std::vector<Shrub> out;
    Shrub cur(static_cast<std::size_t>(p.n),
              Word(static_cast<std::size_t>(d), 0));
    while (true) {
        out.push_back(cur);
        // increment as a dimension-major odometer, last digit fastest
        std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(total) - 1;
        while (pos >= 0) {
            auto dim = static_cast<std::size_t>(pos) / static_cast<std::size_t>(d);
            auto off = static_cast<std::size_t>(pos) % static_cast<std::size_t>(d);
            if (++cur[dim][off] < p.k) break;
            cur[dim][off] = 0;
            --pos;
        }
        if (pos < 0) break;  // d == 0 yields the single empty shrub
    }
    return out;
}

std::vector<Shrubbery> flat_shrubberies(const Params& p, int d) {
    std::vector<Shrub> shrubs = flat_shrubs(p, d);
    if (shrubs.size() * static_cast<std::size_t>(p.r) > (1u << 20))
        throw error("flat_shrubberies: enumeration too large");
    std::vector<Shrubbery> out;
    out.reserve(shrubs.size() * static_cast<std::size_t>(p.r));
    for (int m = 0; m < p.r; ++m)
        for (const Shrub& s : shrubs) out.push_back(Shrubbery{m, s});
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    s.reserve(w.size());
    for (std::uint8_t d : w) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::string shrub_to_string(const Shrub& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += word_to_string(s[i]);
    }
    out += ")";
    return out;
}

std::string to_string(const Shrubbery& s) {
    return "(" + std::to_string(s.root) + "," + shrub_to_string(s.shrub) + ")";
}

}  // namespace totm
