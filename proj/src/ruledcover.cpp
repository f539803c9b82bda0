#include "ruledcover.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ruledcov {

std::pair<RatFn, RatFn> Subst::compose_with_inverse() const {
  std::map<int, RatFn> inv = {{VarS, s_inv}, {VarT, t_inv}};
  return {substitute(s_map, inv), substitute(t_map, inv)};
}

std::array<RatFn, 3> RuledParam::components() const {
  std::array<RatFn, 3> out;
  MPoly t = MPoly::var(VarT);
  for (int i = 0; i < 3; ++i) out[i] = RatFn(r[i] + t * p[i], q);
  return out;
}

int RuledParam::nonzero_p_count() const {
  int n = 0;
  for (const auto& pi : p)
    if (!pi.is_zero()) ++n;
  return n;
}

int RuledParam::smallest_nonzero_p() const {
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_zero()) return i;
  throw InternalError("all p_i are zero");
}

int RuledParam::p_degree() const { return p[smallest_nonzero_p()].deg(VarS); }

bool RuledParam::standardized() const {
  std::vector<MPoly> nonzero;
  for (const auto& pi : p)
    if (!pi.is_zero()) nonzero.push_back(pi);
  if (nonzero.empty()) return false;
  if (nonzero.size() == 1) return nonzero[0].is_constant();
  int d = nonzero[0].deg(VarS);
  for (const auto& pi : nonzero)
    if (pi.deg(VarS) != d) return false;
  return uni_gcd(nonzero).is_one();
}

RuledParam detect_ruled_form(const std::array<RatFn, 3>& components) {
  for (const auto& c : components)
    if (!(c.num().vars_within(kVarsST) && c.den().vars_within(kVarsST)))
      throw NotRuledFormError("components must be rational functions in s and t");

  MPoly common(1);
  for (const auto& c : components) common = mv_lcm(common, c.den());
  if (common.depends_on(VarT))
    throw NotRuledFormError(
        "common denominator involves t; conversion to ruled form is out of scope");

  RuledParam P;
  P.q = common;
  for (int i = 0; i < 3; ++i) {
    MPoly n = components[i].num() * *exact_div(common, components[i].den());
    if (n.deg(VarT) > 1)
      throw NotRuledFormError(
          "numerator has degree > 1 in t; conversion to ruled form is out of scope");
    P.r[i] = n.coeff_wrt(VarT, 0);
    P.p[i] = n.coeff_wrt(VarT, 1);
  }
  if (P.nonzero_p_count() == 0)
    throw NotRuledFormError("no component depends on t; input does not sweep lines");
  return P;
}

namespace {

RatFn rf_var(int v) { return RatFn(MPoly::var(v)); }

// p((a s + b)/(c s + d)) * (c s + d)^D, exact.
MPoly mobius_clear(const MPoly& p, long a, long b, long c, long d, int D) {
  MPoly up = MPoly::var(VarS) * Scalar(a) + MPoly(Scalar(b));
  MPoly dn = MPoly::var(VarS) * Scalar(c) + MPoly(Scalar(d));
  MPoly out;
  for (const auto& [e, coef] : p.terms()) {
    int k = e[VarS];
    out += MPoly(coef) * up.pow(k) * dn.pow(D - k);
  }
  return out;
}

int max_deg_s(const RuledParam& P) {
  int d = 0;
  for (int i = 0; i < 3; ++i)
    d = std::max({d, P.r[i].deg(VarS), P.p[i].deg(VarS)});
  return std::max(d, P.q.deg(VarS));
}

}  // namespace

RuledParam standardize(RuledParam P, unsigned long seed, std::vector<Subst>& log,
                       int budget) {
  if (P.standardized()) return P;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-4, 4);

  // (a) Components that depend on t must also depend on s, or the Moebius
  // step below cannot equalize degrees.
  auto numerator_misses_s = [&] {
    for (int i = 0; i < 3; ++i)
      if (!P.p[i].is_zero() && !P.r[i].depends_on(VarS) && !P.p[i].depends_on(VarS))
        return true;
    return false;
  };
  if (P.nonzero_p_count() >= 2 && numerator_misses_s()) {
    int attempts = 0;
    for (;;) {
      if (++attempts > budget)
        throw BudgetError("standardize: no (a, b) with s-dependent numerators found");
      long a = small(rng), b = small(rng);
      if (a == 0 || b == 0) continue;
      RuledParam cand = P;
      MPoly s = MPoly::var(VarS);
      for (int i = 0; i < 3; ++i) {
        cand.r[i] = P.r[i] + Scalar(a) * s * P.p[i];
        cand.p[i] = Scalar(b) * P.p[i];
      }
      bool ok = true;
      for (int i = 0; i < 3; ++i)
        if (!cand.p[i].is_zero() && !cand.r[i].depends_on(VarS) &&
            !cand.p[i].depends_on(VarS))
          ok = false;
      if (!ok) continue;
      P = cand;
      RatFn tmap = (RatFn(MPoly(Scalar(a))) * rf_var(VarS)) +
                   (RatFn(MPoly(Scalar(b))) * rf_var(VarT));
      RatFn tinv = (rf_var(VarT) - RatFn(MPoly(Scalar(a))) * rf_var(VarS)) /
                   RatFn(MPoly(Scalar(b)));
      log.push_back({"shear_t", rf_var(VarS), tmap, rf_var(VarS), tinv});
      break;
    }
  }

  // (b) Moebius change in s to give all nonzero p_i one degree.
  auto degrees_unequal = [&] {
    int d = -1;
    for (const auto& pi : P.p) {
      if (pi.is_zero()) continue;
      if (d == -1) d = pi.deg(VarS);
      if (pi.deg(VarS) != d) return true;
    }
    return false;
  };
  if (degrees_unequal()) {
    int attempts = 0;
    for (;;) {
      if (++attempts > budget)
        throw BudgetError("standardize: Moebius retry budget exhausted");
      long a = small(rng), b = small(rng), c = small(rng), d = small(rng);
      if (a * d - b * c == 0 || c == 0) continue;
      int D = max_deg_s(P);
      RuledParam cand;
      for (int i = 0; i < 3; ++i) {
        cand.r[i] = mobius_clear(P.r[i], a, b, c, d, D);
        cand.p[i] = mobius_clear(P.p[i], a, b, c, d, D);
      }
      cand.q = mobius_clear(P.q, a, b, c, d, D);
      if (cand.q.is_zero()) continue;
      bool zeros_match = true;
      for (int i = 0; i < 3; ++i)
        if (P.p[i].is_zero() != cand.p[i].is_zero()) zeros_match = false;
      int deg = -1;
      bool equal = zeros_match;
      for (const auto& pi : cand.p) {
        if (pi.is_zero()) continue;
        if (deg == -1) deg = pi.deg(VarS);
        if (pi.deg(VarS) != deg) equal = false;
      }
      if (!equal) continue;
      P = cand;
      RatFn smap = RatFn(MPoly::var(VarS) * Scalar(a) + MPoly(Scalar(b)),
                         MPoly::var(VarS) * Scalar(c) + MPoly(Scalar(d)));
      RatFn sinv = RatFn(MPoly::var(VarS) * Scalar(d) - MPoly(Scalar(b)),
                         MPoly::var(VarS) * Scalar(-c) + MPoly(Scalar(a)));
      log.push_back({"moebius_s", smap, rf_var(VarT), sinv, rf_var(VarT)});
      break;
    }
  }

  // (c) t -> t/Delta(s) with Delta the gcd of the nonzero p_i.
  std::vector<MPoly> nonzero;
  for (const auto& pi : P.p)
    if (!pi.is_zero()) nonzero.push_back(pi);
  MPoly delta = uni_gcd(nonzero);
  if (!delta.is_one()) {
    // (r + (t/delta) p)/q = (r + t (p/delta))/q: only p changes.
    for (int i = 0; i < 3; ++i)
      P.p[i] = P.p[i].is_zero() ? MPoly() : *exact_div(P.p[i], delta);
    RatFn tmap = rf_var(VarT) / RatFn(delta);
    RatFn tinv = rf_var(VarT) * RatFn(delta);
    log.push_back({"scale_t", rf_var(VarS), tmap, rf_var(VarS), tinv});
  }

  if (!P.standardized())
    throw InternalError("standardize: predicate still fails after all steps");
  return P;
}

std::vector<MPoly> base_point_ideal(const RuledParam& P) {
  MPoly t = MPoly::var(VarT);
  std::vector<MPoly> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(P.p[i] * t + P.r[i]);
  gens.push_back(P.q);
  return gens;
}

RuledRemoval remove_base_points_ruled(RuledParam P, std::vector<Subst>& log) {
  if (!P.standardized())
    throw InternalError("remove_base_points_ruled requires a standardized input");
  RuledRemoval result;
  for (;;) {
    GBasis rad = zero_dim_radical(base_point_ideal(P));
    InterpolantResult res = find_interpolant(rad);
    if (res.kind == InterpolantResult::kNoBasePoints) {
      result.out = std::move(P);
      return result;
    }
    if (res.kind == InterpolantResult::kConditionFails)
      throw InternalError(
          "base points of a ruled parametrization must have distinct s-coordinates");

    const MPoly& f = res.f;
    std::array<MPoly, 3> Q;
    for (int i = 0; i < 3; ++i) Q[i] = P.r[i] + f * P.p[i];
    MPoly Qt = uni_gcd({Q[0], Q[1], Q[2], P.q});
    if (Qt.is_constant())
      throw InternalError("interpolant step found no common factor to cancel");
    int old_deg = P.q.deg(VarS);
    for (int i = 0; i < 3; ++i) P.r[i] = *exact_div(Q[i], Qt);
    P.q = *exact_div(P.q, Qt);
    if (P.q.deg(VarS) >= old_deg)
      throw InternalError("denominator degree did not decrease");

    RatFn frf{f};
    RatFn t = RatFn(MPoly::var(VarT));
    log.push_back({"interpolant", RatFn(MPoly::var(VarS)),
                   RatFn(MPoly(1)) / t + frf, RatFn(MPoly::var(VarS)),
                   RatFn(MPoly(1)) / (t - frf)});
    RatFn qt_t = RatFn(MPoly(1)) / (RatFn(Qt) * t);
    log.push_back({"scale_t", RatFn(MPoly::var(VarS)), qt_t,
                   RatFn(MPoly::var(VarS)), qt_t});
    result.steps.push_back({f, Qt});
  }
}

std::array<MPoly, 3> compute_alphas(const RuledParam& P) {
  auto alpha = [&](int i, int j) { return -P.p[i] * P.r[j] + P.p[j] * P.r[i]; };
  return {alpha(0, 1), alpha(0, 2), alpha(1, 2)};
}

bool normality_test(const RuledParam& P) {
  int bound = P.p_degree() + P.q.deg(VarS);
  for (const auto& a : compute_alphas(P))
    if (!a.is_zero() && a.deg(VarS) > bound) return true;
  return false;
}

namespace {

std::array<MPoly, 3> compute_A(const RuledParam& P) {
  auto alphas = compute_alphas(P);
  MPoly x = MPoly::var(VarX), y = MPoly::var(VarY), z = MPoly::var(VarZ);
  return {P.q * P.p[1] * x - P.q * P.p[0] * y - alphas[0],
          P.q * P.p[2] * x - P.q * P.p[0] * z - alphas[1],
          P.q * P.p[2] * y - P.q * P.p[1] * z - alphas[2]};
}

}  // namespace

Line3 critical_line(const RuledParam& P) {
  Line3 line;
  for (const auto& A : compute_A(P)) {
    if (A.is_zero()) continue;
    MPoly form = primitive_positive(A.lc_wrt(VarS));
    if (std::find(line.forms.begin(), line.forms.end(), form) == line.forms.end())
      line.forms.push_back(form);
  }

  // Rows: cx*x + cy*y + cz*z + c0 = 0.
  struct Row {
    std::array<Scalar, 4> a;
  };
  std::vector<Row> rows;
  for (const auto& f : line.forms) {
    Row row;
    Exponents e{};
    for (int i = 0; i < 3; ++i) {
      Exponents ev{};
      ev[VarX + i] = 1;
      row.a[i] = f.coeff(ev);
    }
    row.a[3] = f.coeff(e);
    rows.push_back(row);
  }

  // For each candidate free coordinate (z preferred), try to solve the 2x2
  // system in the remaining two.
  for (int free_var : {2, 1, 0}) {
    std::array<int, 2> piv{};
    int n = 0;
    for (int v = 0; v < 3; ++v)
      if (v != free_var) piv[n++] = v;
    // Gaussian elimination on the pivot columns.
    std::vector<std::array<Scalar, 3>> sys;  // [piv0, piv1 | free coeff, const]
    for (const auto& r : rows)
      sys.push_back({r.a[piv[0]], r.a[piv[1]], Scalar(0)});
    // Solve rows for the two pivot unknowns twice: once for the particular
    // point (free = 0) and once for the direction (free = 1, homogeneous).
    auto solve2 = [&](bool homogeneous) -> std::optional<std::array<Scalar, 2>> {
      // Build augmented rows: a*u + b*v = rhs.
      std::vector<std::array<Scalar, 3>> m;
      for (const auto& r : rows) {
        Scalar rhs = homogeneous ? -r.a[free_var] : -r.a[3];
        m.push_back({r.a[piv[0]], r.a[piv[1]], rhs});
      }
      // Eliminate.
      int rank = 0;
      for (int col = 0; col < 2; ++col) {
        int sel = -1;
        for (size_t i = rank; i < m.size(); ++i)
          if (m[i][col] != 0) {
            sel = (int)i;
            break;
          }
        if (sel == -1) return std::nullopt;
        std::swap(m[rank], m[sel]);
        for (size_t i = 0; i < m.size(); ++i) {
          if ((int)i == rank || m[i][col] == 0) continue;
          Scalar fct = m[i][col] / m[rank][col];
          for (int c = 0; c < 3; ++c) m[i][c] -= fct * m[rank][c];
        }
        ++rank;
      }
      for (size_t i = 2; i < m.size(); ++i)
        if (m[i][2] != 0) return std::nullopt;  // inconsistent
      return std::array<Scalar, 2>{m[0][2] / m[0][0], m[1][2] / m[1][1]};
    };
    auto pt = solve2(false);
    auto dr = solve2(true);
    if (!pt || !dr) continue;
    line.point = {Scalar(0), Scalar(0), Scalar(0)};
    line.dir = {Scalar(0), Scalar(0), Scalar(0)};
    line.point[piv[0]] = (*pt)[0];
    line.point[piv[1]] = (*pt)[1];
    line.dir[piv[0]] = (*dr)[0];
    line.dir[piv[1]] = (*dr)[1];
    line.dir[free_var] = Scalar(1);

    // Sanity: every parametric point must annihilate every form.
    for (const auto& f : line.forms) {
      std::map<int, Scalar> at0 = {{VarX, line.point[0]},
                                   {VarY, line.point[1]},
                                   {VarZ, line.point[2]}};
      std::map<int, Scalar> at1 = {{VarX, line.point[0] + line.dir[0]},
                                   {VarY, line.point[1] + line.dir[1]},
                                   {VarZ, line.point[2] + line.dir[2]}};
      if (eval_poly(f, at0) != 0 || eval_poly(f, at1) != 0)
        throw InternalError("critical line solution fails its own forms");
    }
    return line;
  }
  throw InternalError("critical line system does not have rank 2");
}

std::array<RatFn, 3> second_parametrization(const RuledParam& P, int k) {
  if (k < 0) {
    for (int i = 2; i >= 0; --i)
      if (!P.p[i].is_zero()) {
        k = i;
        break;
      }
  }
  if (k < 0) throw InternalError("second_parametrization: all p_i are zero");
  if (P.p[k].is_zero()) throw InternalError("second_parametrization: p_k is zero");

  std::map<int, RatFn> inv_s = {{VarS, RatFn(MPoly(1), MPoly::var(VarS))}};
  RatFn q_hat = substitute_poly(P.q, inv_s);
  RatFn r_hat = substitute_poly(P.r[k], inv_s);
  RatFn p_hat = substitute_poly(P.p[k], inv_s);
  RatFn tau = (q_hat * RatFn(MPoly::var(VarT)) + r_hat) / p_hat;

  std::map<int, RatFn> bind = {{VarS, RatFn(MPoly(1), MPoly::var(VarS))},
                               {VarT, tau}};
  std::array<RatFn, 3> H;
  auto comps = P.components();
  for (int i = 0; i < 3; ++i) {
    H[i] = substitute(comps[i], bind);
    std::map<int, RatFn> at0 = {{VarS, RatFn(MPoly(0))}};
    RatFn den_at0 = substitute_poly(H[i].den(), at0);
    if (den_at0.is_zero())
      throw InternalError("second chart denominator vanishes at s = 0");
  }
  return H;
}

CoverReport cover(const std::array<RatFn, 3>& components, unsigned long seed,
                  int budget) {
  CoverReport report;
  RuledParam P = detect_ruled_form(components);
  P = standardize(std::move(P), seed, report.log, budget);
  RuledRemoval removal = remove_base_points_ruled(std::move(P), report.log);
  const RuledParam& debased = removal.out;
  report.iterations = static_cast<int>(removal.steps.size());
  report.primary = debased;
  report.cylinder = debased.is_cylinder();
  report.normal = normality_test(debased);
  if (!report.normal) {
    report.line = critical_line(debased);
    report.secondary = second_parametrization(debased);
  }
  return report;
}

}  // namespace ruledcov
