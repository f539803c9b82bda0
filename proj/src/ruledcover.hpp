#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "ratfn.hpp"

namespace ruledcov {

// One invertible parameter change (s,t) -> (s_map, t_map), with its inverse.
struct Subst {
  std::string kind;
  RatFn s_map, t_map;
  RatFn s_inv, t_inv;

  // Composition with the stored inverse; identity iff the pair is consistent.
  std::pair<RatFn, RatFn> compose_with_inverse() const;
};

// Ruled-form parametrization: component i is (r_i + t*p_i)/q with univariate
// r_i, p_i, q in s.
struct RuledParam {
  std::array<MPoly, 3> r;
  std::array<MPoly, 3> p;
  MPoly q;

  std::array<RatFn, 3> components() const;
  // Common degree of the nonzero p_i (requires standardized()).
  int p_degree() const;
  int nonzero_p_count() const;
  int smallest_nonzero_p() const;  // 0-based index
  bool is_cylinder() const { return nonzero_p_count() == 1; }

  // Standardized predicate: nonzero p_i share one degree and are coprime; a
  // single nonzero p_i must be a nonzero constant.
  bool standardized() const;
};

// Extracts ruled form from three rational components; throws
// NotRuledFormError when the common denominator involves t or a numerator has
// t-degree above 1.
RuledParam detect_ruled_form(const std::array<RatFn, 3>& components);

// Seeded standardization: (s, as+bt) when numerators lack s, a Moebius change
// in s to equalize the p_i degrees, then t -> t/gcd(p_i).
RuledParam standardize(RuledParam P, unsigned long seed, std::vector<Subst>& log,
                       int budget = 64);

// Generators {p_i t + r_i, q} of the affine base-point ideal.
std::vector<MPoly> base_point_ideal(const RuledParam& P);

// One round of interpolant removal: the interpolant f and the common factor
// cancelled from the numerators and denominator.
struct RemovalStep {
  MPoly f;
  MPoly cancelled;
};

// Iterated interpolant removal; returns the base-point-free parametrization
// and one record per iteration. Requires a standardized input.
struct RuledRemoval {
  RuledParam out;
  std::vector<RemovalStep> steps;
};
RuledRemoval remove_base_points_ruled(RuledParam P, std::vector<Subst>& log);

// (alpha_12, alpha_13, alpha_23) with alpha_ij = -p_i r_j + p_j r_i.
std::array<MPoly, 3> compute_alphas(const RuledParam& P);

// True iff some deg(alpha_ij) exceeds deg(p_k) + deg(q), i.e. the chart is
// surjective.
bool normality_test(const RuledParam& P);

struct Line3 {
  std::vector<MPoly> forms;       // linear in x,y,z, rank 2
  std::array<Scalar, 3> point;    // parametric base point
  std::array<Scalar, 3> dir;      // parametric direction, nonzero
};

// Line containing every point the chart can miss. Requires standardized,
// base-point-free, non-normal input.
Line3 critical_line(const RuledParam& P);

// Second chart H(s,t) = P(1/s, (q(1/s)t + r_k(1/s))/p_k(1/s)); H(0,t)
// parametrizes the critical line. k = -1 picks the highest nonzero p index.
std::array<RatFn, 3> second_parametrization(const RuledParam& P, int k = -1);

struct CoverReport {
  RuledParam primary;
  std::optional<std::array<RatFn, 3>> secondary;
  std::optional<Line3> line;
  bool normal = false;
  bool cylinder = false;
  int iterations = 0;  // interpolant-removal rounds
  std::vector<Subst> log;
};

// Full pipeline: detect -> standardize -> remove base points -> normality,
// plus the critical line and second chart when the primary is not normal.
CoverReport cover(const std::array<RatFn, 3>& components, unsigned long seed,
                  int budget = 64);

}  // namespace ruledcov
