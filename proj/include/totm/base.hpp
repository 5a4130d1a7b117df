// Shared parameter block and error types.
//
// Everything in this library is parametrized by (n, k, r):
//   n >= 1  number of dimensions,
//   k >= 2  arity of each splitting operation,
//   r >= 1  number of roots.
// Digits are restricted to 0..9 so that address words have a stable
// single-character literal form.

#pragma once

#include <stdexcept>
#include <string>

namespace totm {

struct Params {
    int n = 1;
    int k = 2;
    int r = 1;
};

// Generic domain error: invalid arguments, failed validation, exceeded
// budgets. The CLI maps this to exit code 2 unless it is a comparison
// failure, which callers handle explicitly.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Error produced by the literal parsers; carries a 1-based position.
struct parse_error : error {
    int line;
    int col;
    parse_error(int line_, int col_, const std::string& what)
        : error("parse error at line " + std::to_string(line_) + ", col " +
                std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
};

inline void check_params(const Params& p) {
    if (p.n < 1) throw error("params: n must be >= 1");
    if (p.k < 2 || p.k > 10) throw error("params: k must be in 2..10");
    if (p.r < 1) throw error("params: r must be >= 1");
}

}  // namespace totm
