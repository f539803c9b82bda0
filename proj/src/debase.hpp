#pragma once

#include <array>
#include <optional>
#include <vector>

#include "groebner.hpp"
#include "ruledcover.hpp"

namespace ruledcov {

// Arbitrary rational surface parametrization in common-denominator form
// (p1/q, p2/q, p3/q) with p_i, q in k[s,t].
struct SurfaceParam {
  std::array<MPoly, 3> p;
  MPoly q;

  static SurfaceParam from_components(const std::array<RatFn, 3>& components);
  std::array<RatFn, 3> components() const;

  // Cancel the common gcd of the four polynomials.
  void cancel_gcd();

  // Condition 1: equal total degrees of p1, p2, p3, q and gcd 1.
  bool condition1() const;
  // Condition 2: the t^n coefficient (n = common total degree) is a nonzero
  // constant in all four polynomials.
  bool condition2() const;
};

// Reparametrize with a seeded projective-linear change of (s,t) until
// condition 1 holds. Leaves an already conditioned input untouched.
SurfaceParam enforce_condition1(SurfaceParam P, unsigned long seed,
                                std::vector<Subst>& log, int budget = 64);

// Seeded shear (s + lambda*t, t) until condition 2 holds; condition 1 is
// re-verified afterward.
SurfaceParam enforce_condition2(SurfaceParam P, unsigned long seed,
                                std::vector<Subst>& log, int budget = 32);

struct DebaseResult {
  SurfaceParam out;
  std::optional<MPoly> interpolant;  // absent when already base-point free
  std::vector<long> shears;          // condition-3 shear lambdas, in order
  GBasis base_points_before;         // radical of the input's base-point ideal
  std::vector<Subst> log;
  int iterations = 0;
};

// Radical loop: find t - f(s) in the radical of <p1,p2,p3,q>, apply
// psi = (s, 1/t + f(s)); shear with seeded lambda when no interpolant
// exists. The output is re-verified base-point free.
DebaseResult remove_base_points_general(SurfaceParam P, unsigned long seed,
                                        int budget = 32);

// Reduced lex(t>s) basis of the radical of the affine base-point ideal.
GBasis base_point_report(const SurfaceParam& P);

}  // namespace ruledcov
