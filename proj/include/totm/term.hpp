// Terms of the free algebra with k-ary joins and unary restrictions.
//
// The signature has, per dimension i, one k-ary operation l<i> (join) and k
// unary operations a<i>_<j> (restriction by digit j). Terms are built over r
// generators g0..g{r-1}. The defining identities are
//   (i)   l<i>(a<i>_0(x), ..., a<i>_{k-1}(x)) = x
//   (ii)  a<i>_j(l<i>(x_0, ..., x_{k-1})) = x_j
//   (iii) a<i'>_m(a<i>_l(x)) = a<i>_l(a<i'>_m(x))      for i != i'
// (recorded here with the restriction written as a function; in display
// form restrictions apply on the right, so the composite "t then a<i>_j"
// is the node a<i>_j(t)).
//
// Normal form: no restriction node directly above a join node, so a
// normalized term is a tree of joins whose leaves are pure restriction
// towers over generators; towers keep dimensions non-decreasing from the
// generator outward and same-dimension restrictions in application order
// (first applied innermost). Normalization is a bottom-up rebuild through
// apply_alpha and the cancelling join constructor; equality of terms is
// decided by flattening over a sufficiently deep address grid, never by
// comparing normal forms of join trees directly.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "totm/shrubbery.hpp"

namespace totm {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Generator, Lambda, Alpha };
    Kind kind;
    int dim = -1;   // Lambda, Alpha
    int idx = -1;   // Generator: generator index; Alpha: digit
    std::vector<TermPtr> kids;  // Lambda: k children; Alpha: 1
};

// Raw constructors; no rewriting, no validation beyond arity.
TermPtr mk_gen(int i);
TermPtr mk_alpha_raw(int dim, int digit, TermPtr kid);
TermPtr mk_lambda_raw(int dim, std::vector<TermPtr> kids);

// Checks dims, digits, generator indices and arities against the params.
void validate(const Params& p, const TermPtr& t);

// Structural (syntactic) equality.
bool term_identical(const TermPtr& a, const TermPtr& b);

// The term "t then a<dim>_<digit>", rewritten eagerly: selects a child of a
// same-dimension join, pushes through other joins, and otherwise inserts
// into the restriction tower at its dimension-sorted position.
TermPtr apply_alpha(const Params& p, const TermPtr& t, int dim, int digit);

// Join constructor with cancellation: when the children are exactly
// "x then a<dim>_l" for a common x, returns x instead of a join node.
// The candidate is recovered syntactically and then verified by
// re-application, so a missed pattern is possible in principle but a wrong
// collapse is not.
TermPtr mk_lambda(const Params& p, int dim, std::vector<TermPtr> kids);

// Bottom-up normalization; idempotent.
TermPtr normalize(const Params& p, const TermPtr& t);

int lambda_count(const TermPtr& t);

// Maximum nesting of same-dimension join nodes along any path; flattening
// at any N >= this bound leaves no residual join.
int resolution_depth(const TermPtr& t);

// Pure restriction tower over a generator?
bool is_tower(const TermPtr& t);

// The tower corresponding to an address: generator root, then restrictions
// dimension by dimension, first digit applied first.
TermPtr tree_encode(const Params& p, const Shrubbery& s);

// Inverse of tree_encode; requires a pure tower.
Shrubbery tree_decode(const Params& p, const TermPtr& t);

// Every flat address of depth N mapped to the address of the resolved
// tower. Throws when N is below the resolution depth of normalize(t)
// (a residual join would survive) or when the grid exceeds 2^20.
std::map<Shrub, Shrubbery> flatten(const Params& p, const TermPtr& t, int N);

// Decides equality in the free algebra: normalize both sides and compare
// flatten maps at the larger resolution depth.
bool term_eq(const Params& p, const TermPtr& a, const TermPtr& b);

std::string to_string(const TermPtr& t);

}  // namespace totm
