#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mpoly.hpp"

namespace ruledcov {

// Lexicographic monomial order given by a variable priority permutation
// (highest-priority variable first). Total, multiplicative, well-founded.
struct MonomialOrder {
  std::array<int, kNumVars> prio;

  // Lex order with the listed variables first (in the given precedence);
  // remaining variables follow in the global order.
  static MonomialOrder lex(std::initializer_list<int> priority);

  bool less(const Exponents& a, const Exponents& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

// Lex order t > s used throughout the base-point machinery.
MonomialOrder order_t_s();

struct GBasis {
  std::vector<MPoly> gens;
  MonomialOrder order;

  bool is_trivial() const;  // generates the whole ring
  std::vector<std::string> printed() const;
};

// Leading exponent/term of p under the order. Requires p nonzero.
Exponents leading_exp(const MPoly& p, const MonomialOrder& ord);

// Remainder of full multivariate division of f by the basis; zero iff f lies
// in the ideal when gens form a Groebner basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gens,
                  const MonomialOrder& ord);
MPoly normal_form(const MPoly& f, const GBasis& gb);

// The unique reduced Groebner basis of <gens> for the order (Buchberger with
// the normal selection strategy and both standard criteria).
GBasis buchberger(std::vector<MPoly> gens, const MonomialOrder& ord);

// <a> == <b> via mutual normal-form reduction.
bool ideal_equal(const GBasis& a, const GBasis& b);
bool ideal_contains(const GBasis& gb, const std::vector<MPoly>& polys);

// Monic generator of <gens> ∩ k[keep] for a zero-dimensional (or trivial)
// bivariate ideal; 1 for the trivial ideal. Throws NotZeroDimensionalError
// when no univariate element exists.
MPoly eliminate_univariate(const std::vector<MPoly>& gens, int keep);

// Reduced lex(t>s) basis of the radical of a zero-dimensional ideal in
// k[s,t], by adjoining squarefree parts of both elimination univariates.
GBasis zero_dim_radical(const std::vector<MPoly>& gens);

// Result of scanning a reduced lex(t>s) basis for an element t - f(s).
struct InterpolantResult {
  enum Kind { kNoBasePoints, kFound, kConditionFails } kind;
  MPoly f;  // valid when kind == kFound
};
InterpolantResult find_interpolant(const GBasis& radical);

// Intersection of two ideals in k[s,t] via the auxiliary-variable trick
// (w·I + (1-w)·J, then eliminate w). Used by verification oracles.
std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a,
                                   const std::vector<MPoly>& b);

}  // namespace ruledcov
