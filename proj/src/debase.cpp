#include "debase.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ruledcov {

namespace {

RatFn rf_var(int v) { return RatFn(MPoly::var(v)); }

// g(s + lambda*t, t), exact polynomial substitution.
MPoly shear_poly(const MPoly& g, long lambda) {
  MPoly img = MPoly::var(VarS) + Scalar(lambda) * MPoly::var(VarT);
  MPoly out;
  for (const auto& [e, c] : g.terms()) {
    Exponents rest = e;
    rest[VarS] = 0;
    MPoly term;
    term.add_term(rest, c);
    out += term * img.pow(e[VarS]);
  }
  return out;
}

// g(s, 1/t + f(s)) * t^N for N >= deg_t(g), exact.
MPoly psi_clear(const MPoly& g, const MPoly& f, int N) {
  MPoly img = MPoly(1) + MPoly::var(VarT) * f;  // (1 + t f); 1/t + f = img / t
  MPoly out;
  for (const auto& [e, c] : g.terms()) {
    Exponents rest = e;
    rest[VarT] = 0;
    MPoly term;
    term.add_term(rest, c);
    out += term * img.pow(e[VarT]) * MPoly::var(VarT).pow(N - e[VarT]);
  }
  return out;
}

// Deterministic shear lambda sequence 1, -1, 2, -2, 3, ...
long shear_lambda(int index) {
  int k = index / 2 + 1;
  return index % 2 == 0 ? k : -k;
}

}  // namespace

SurfaceParam SurfaceParam::from_components(const std::array<RatFn, 3>& components) {
  MPoly common(1);
  for (const auto& c : components) common = mv_lcm(common, c.den());
  SurfaceParam P;
  // Normalize the shared denominator like RatFn does: integer-primitive with
  // positive leading coefficient.
  P.q = primitive_positive(common);
  Scalar unit = exact_div(P.q, common)->constant_value();
  for (int i = 0; i < 3; ++i)
    P.p[i] = components[i].num() * *exact_div(common, components[i].den()) * unit;
  P.cancel_gcd();
  return P;
}

std::array<RatFn, 3> SurfaceParam::components() const {
  return {RatFn(p[0], q), RatFn(p[1], q), RatFn(p[2], q)};
}

void SurfaceParam::cancel_gcd() {
  MPoly g = mv_gcd({p[0], p[1], p[2], q});
  if (g.is_one()) return;
  for (auto& pi : p) pi = pi.is_zero() ? MPoly() : *exact_div(pi, g);
  q = *exact_div(q, g);
}

bool SurfaceParam::condition1() const {
  int n = q.total_degree();
  for (const auto& pi : p)
    if (pi.total_degree() != n) return false;
  return mv_gcd({p[0], p[1], p[2], q}).is_one();
}

bool SurfaceParam::condition2() const {
  int n = q.total_degree();
  for (const auto& pi : p) n = std::max(n, pi.total_degree());
  Exponents tn{};
  tn[VarT] = n;
  if (q.coeff(tn) == 0) return false;
  for (const auto& pi : p)
    if (pi.coeff(tn) == 0) return false;
  return true;
}

SurfaceParam enforce_condition1(SurfaceParam P, unsigned long seed,
                                std::vector<Subst>& log, int budget) {
  for (const auto& pi : P.p)
    if (pi.is_constant())
      throw Error(kError, "condition 1 requires nonconstant components");
  P.cancel_gcd();
  if (P.condition1()) return P;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-2, 2);
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Projective-linear change of (t : s : 1) by an integer matrix M.
    long M[3][3];
    for (auto& row : M)
      for (long& x : row) x = small(rng);
    long det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det == 0) continue;

    auto frac = [](long a, long b, long c) {
      return RatFn(Scalar(a) * MPoly::var(VarT) + Scalar(b) * MPoly::var(VarS) +
                   MPoly(Scalar(c)));
    };
    RatFn den = frac(M[2][0], M[2][1], M[2][2]);
    if (den.is_zero()) continue;
    RatFn t_map = frac(M[0][0], M[0][1], M[0][2]) / den;
    RatFn s_map = frac(M[1][0], M[1][1], M[1][2]) / den;
    std::map<int, RatFn> bind = {{VarS, s_map}, {VarT, t_map}};

    std::array<RatFn, 3> comps = P.components();
    std::array<RatFn, 3> mapped;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      try {
        mapped[i] = substitute(comps[i], bind);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) continue;
    SurfaceParam cand = SurfaceParam::from_components(mapped);
    if (!cand.condition1()) continue;

    // Inverse from the adjugate of M.
    long A[3][3];
    A[0][0] = M[1][1] * M[2][2] - M[1][2] * M[2][1];
    A[0][1] = M[0][2] * M[2][1] - M[0][1] * M[2][2];
    A[0][2] = M[0][1] * M[1][2] - M[0][2] * M[1][1];
    A[1][0] = M[1][2] * M[2][0] - M[1][0] * M[2][2];
    A[1][1] = M[0][0] * M[2][2] - M[0][2] * M[2][0];
    A[1][2] = M[0][2] * M[1][0] - M[0][0] * M[1][2];
    A[2][0] = M[1][0] * M[2][1] - M[1][1] * M[2][0];
    A[2][1] = M[0][1] * M[2][0] - M[0][0] * M[2][1];
    A[2][2] = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    RatFn inv_den = frac(A[2][0], A[2][1], A[2][2]);
    RatFn t_inv = frac(A[0][0], A[0][1], A[0][2]) / inv_den;
    RatFn s_inv = frac(A[1][0], A[1][1], A[1][2]) / inv_den;

    log.push_back({"projective", s_map, t_map, s_inv, t_inv});
    return cand;
  }
  throw BudgetError("enforce_condition1: retry budget exhausted after " +
                    std::to_string(budget) + " attempts");
}

SurfaceParam enforce_condition2(SurfaceParam P, unsigned long /*seed*/,
                                std::vector<Subst>& log, int budget) {
  if (P.condition2()) return P;
  for (int i = 0; i < budget; ++i) {
    long lambda = shear_lambda(i);
    SurfaceParam cand;
    for (int j = 0; j < 3; ++j) cand.p[j] = shear_poly(P.p[j], lambda);
    cand.q = shear_poly(P.q, lambda);
    if (!cand.condition2()) continue;
    if (!cand.condition1() && P.condition1())
      throw InternalError("shear broke condition 1");
    log.push_back({"shear_s", rf_var(VarS) + RatFn(MPoly(Scalar(lambda))) * rf_var(VarT),
                   rf_var(VarT),
                   rf_var(VarS) - RatFn(MPoly(Scalar(lambda))) * rf_var(VarT),
                   rf_var(VarT)});
    return cand;
  }
  throw BudgetError("enforce_condition2: retry budget exhausted after " +
                    std::to_string(budget) + " attempts");
}

GBasis base_point_report(const SurfaceParam& P) {
  try {
    return zero_dim_radical({P.p[0], P.p[1], P.p[2], P.q});
  } catch (const NotZeroDimensionalError&) {
    throw NotZeroDimensionalError(
        "base-point ideal is not zero-dimensional; gcd(p1,p2,p3,q) != 1");
  }
}

DebaseResult remove_base_points_general(SurfaceParam P, unsigned long seed,
                                        int budget) {
  DebaseResult res;
  P.cancel_gcd();
  res.base_points_before = base_point_report(P);

  GBasis rad = res.base_points_before;
  int shear_index = 0;
  for (int round = 0; round < budget; ++round) {
    InterpolantResult ir = find_interpolant(rad);
    if (ir.kind == InterpolantResult::kNoBasePoints) {
      res.out = P;
      return res;
    }
    if (ir.kind == InterpolantResult::kFound) {
      const MPoly& f = ir.f;
      int N = P.q.deg(VarT);
      for (const auto& pi : P.p) N = std::max(N, pi.deg(VarT));
      SurfaceParam next;
      for (int i = 0; i < 3; ++i) next.p[i] = psi_clear(P.p[i], f, N);
      next.q = psi_clear(P.q, f, N);
      next.cancel_gcd();

      RatFn t = rf_var(VarT);
      RatFn frf{f};
      res.log.push_back({"interpolant", rf_var(VarS), RatFn(MPoly(1)) / t + frf,
                         rf_var(VarS), RatFn(MPoly(1)) / (t - frf)});
      res.interpolant = f;
      ++res.iterations;

      P = next;
      rad = base_point_report(P);
      if (rad.is_trivial()) {
        res.out = P;
        return res;
      }
      continue;  // rare: verification found leftovers, keep iterating
    }

    // No t - f(s): put the base points in general position with a shear.
    if (!P.condition1() || !P.condition2()) {
      if (!P.condition1()) P = enforce_condition1(P, seed, res.log);
      if (!P.condition2()) P = enforce_condition2(P, seed, res.log);
    } else {
      if (shear_index >= budget)
        throw BudgetError("remove_base_points_general: shear budget exhausted");
      long lambda = shear_lambda(shear_index++);
      SurfaceParam cand;
      for (int j = 0; j < 3; ++j) cand.p[j] = shear_poly(P.p[j], lambda);
      cand.q = shear_poly(P.q, lambda);
      cand.cancel_gcd();
      res.shears.push_back(lambda);
      res.log.push_back(
          {"shear_s", rf_var(VarS) + RatFn(MPoly(Scalar(lambda))) * rf_var(VarT),
           rf_var(VarT),
           rf_var(VarS) - RatFn(MPoly(Scalar(lambda))) * rf_var(VarT),
           rf_var(VarT)});
      P = cand;
      if (!P.condition2()) {
        std::vector<Subst> fix_log;
        P = enforce_condition2(P, seed, fix_log);
        for (auto& e : fix_log) res.log.push_back(std::move(e));
      }
    }
    rad = base_point_report(P);
  }
  throw BudgetError("remove_base_points_general: iteration budget exhausted");
}

}  // namespace ruledcov
