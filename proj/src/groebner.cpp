#include "groebner.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace ruledcov {

MonomialOrder MonomialOrder::lex(std::initializer_list<int> priority) {
  MonomialOrder ord;
  size_t n = 0;
  std::array<bool, kNumVars> used{};
  for (int v : priority) {
    ord.prio[n++] = v;
    used[v] = true;
  }
  for (int v = 0; v < kNumVars; ++v)
    if (!used[v]) ord.prio[n++] = v;
  return ord;
}

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  for (int i = 0; i < kNumVars; ++i) {
    int v = prio[i];
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

MonomialOrder order_t_s() { return MonomialOrder::lex({VarT, VarS}); }

bool GBasis::is_trivial() const {
  return gens.size() == 1 && gens[0].is_one();
}

std::vector<std::string> GBasis::printed() const {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.str());
  return out;
}

Exponents leading_exp(const MPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw InternalError("leading_exp of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || ord.less(*best, e)) best = &e;
  return *best;
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (int v = 0; v < kNumVars; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (int v = 0; v < kNumVars; ++v) e[v] = std::max(a[v], b[v]);
  return e;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (int v = 0; v < kNumVars; ++v) e[v] = a[v] - b[v];
  return e;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (int v = 0; v < kNumVars; ++v) e[v] = a[v] + b[v];
  return e;
}

MPoly monomial(const Exponents& e, const Scalar& c) {
  MPoly m;
  m.add_term(e, c);
  return m;
}

struct GenInfo {
  MPoly poly;
  Exponents lt;
  Scalar lc;
};

GenInfo make_info(const MPoly& p, const MonomialOrder& ord) {
  Exponents lt = leading_exp(p, ord);
  return GenInfo{p, lt, p.coeff(lt)};
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gens,
                  const MonomialOrder& ord) {
  std::vector<GenInfo> info;
  info.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) info.push_back(make_info(g, ord));

  MPoly work = f;
  MPoly rem;
  while (!work.is_zero()) {
    Exponents lt = leading_exp(work, ord);
    bool reduced = false;
    for (const auto& g : info) {
      if (!divides(g.lt, lt)) continue;
      Scalar c = work.coeff(lt) / g.lc;
      work -= monomial(exp_sub(lt, g.lt), c) * g.poly;
      reduced = true;
      break;
    }
    if (!reduced) {
      // Move the irreducible leading term to the remainder.
      MPoly m = monomial(lt, work.coeff(lt));
      rem += m;
      work -= m;
    }
  }
  return rem;
}

MPoly normal_form(const MPoly& f, const GBasis& gb) {
  return normal_form(f, gb.gens, gb.order);
}

namespace {

MPoly s_poly(const GenInfo& a, const GenInfo& b) {
  Exponents l = exp_lcm(a.lt, b.lt);
  return monomial(exp_sub(l, a.lt), Scalar(1) / a.lc) * a.poly -
         monomial(exp_sub(l, b.lt), Scalar(1) / b.lc) * b.poly;
}

// Interreduce a Groebner basis into the unique reduced basis.
std::vector<MPoly> reduce_basis(std::vector<MPoly> basis, const MonomialOrder& ord) {
  // Drop generators whose leading term another generator's leading term
  // divides.
  std::vector<MPoly> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    Exponents lt = leading_exp(basis[i], ord);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Exponents ltj = leading_exp(basis[j], ord);
      if (divides(ltj, lt) && (ltj != lt || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  // Tail-reduce each generator against the others.
  for (;;) {
    bool changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<MPoly> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      MPoly r = normal_form(kept[i], others, ord);
      if (r != kept[i]) {
        changed = true;
        if (r.is_zero()) {
          kept.erase(kept.begin() + i);
          --i;
        } else {
          kept[i] = r;
        }
      }
    }
    if (!changed) break;
  }
  for (auto& g : kept) g *= Scalar(1) / g.coeff(leading_exp(g, ord));
  std::sort(kept.begin(), kept.end(), [&](const MPoly& a, const MPoly& b) {
    return ord.less(leading_exp(a, ord), leading_exp(b, ord));
  });
  return kept;
}

}  // namespace

GBasis buchberger(std::vector<MPoly> gens, const MonomialOrder& ord) {
  std::vector<GenInfo> g;
  for (auto& p : gens) {
    if (p.is_zero()) continue;
    g.push_back(make_info(p, ord));
  }
  if (g.empty()) throw InternalError("buchberger: all generators are zero");

  struct Pair {
    size_t i, j;
    Exponents lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return ord.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pending;
  auto push_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < k; ++i)
      pending.push_back({i, k, exp_lcm(g[i].lt, g[k].lt)});
  };
  for (size_t k = 1; k < g.size(); ++k) push_pairs_with(k);

  std::set<std::pair<size_t, size_t>> done;
  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    done.insert({pr.i, pr.j});

    // First criterion: coprime leading terms.
    if (pr.lcm == exp_mul(g[pr.i].lt, g[pr.j].lt)) continue;
    // Chain criterion: some k with LT(k) | lcm and both pairs handled.
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].lt, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) &&
          done.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    std::vector<MPoly> cur;
    cur.reserve(g.size());
    for (const auto& gi : g) cur.push_back(gi.poly);
    MPoly r = normal_form(s_poly(g[pr.i], g[pr.j]), cur, ord);
    if (r.is_zero()) continue;
    r *= Scalar(1) / r.coeff(leading_exp(r, ord));
    g.push_back(make_info(r, ord));
    push_pairs_with(g.size() - 1);
  }

  std::vector<MPoly> basis;
  basis.reserve(g.size());
  for (const auto& gi : g) basis.push_back(gi.poly);
  return GBasis{reduce_basis(std::move(basis), ord), ord};
}

bool ideal_contains(const GBasis& gb, const std::vector<MPoly>& polys) {
  for (const auto& p : polys)
    if (!normal_form(p, gb).is_zero()) return false;
  return true;
}

bool ideal_equal(const GBasis& a, const GBasis& b) {
  return ideal_contains(a, b.gens) && ideal_contains(b, a.gens);
}

MPoly eliminate_univariate(const std::vector<MPoly>& gens, int keep) {
  // Lex order with `keep` last: its elimination ideal shows up as the pure
  // k[keep] elements of the basis.
  MonomialOrder ord;
  size_t n = 0;
  for (int v = 0; v < kNumVars; ++v)
    if (v != keep) ord.prio[n++] = v;
  ord.prio[n] = keep;

  GBasis gb = buchberger(gens, ord);
  if (gb.is_trivial()) return MPoly(1);
  std::vector<MPoly> pure;
  for (const auto& g : gb.gens)
    if (g.vars_within(1u << keep)) pure.push_back(g);
  if (pure.empty())
    throw NotZeroDimensionalError(
        std::string("ideal has no univariate element in ") + var_name(keep));
  return uni_gcd(pure);
}

GBasis zero_dim_radical(const std::vector<MPoly>& gens) {
  MPoly ms = eliminate_univariate(gens, VarS);
  if (ms.is_one()) return buchberger(gens, order_t_s());
  MPoly mt = eliminate_univariate(gens, VarT);
  std::vector<MPoly> extended = gens;
  extended.push_back(squarefree_part(ms));
  extended.push_back(squarefree_part(mt));
  return buchberger(extended, order_t_s());
}

InterpolantResult find_interpolant(const GBasis& radical) {
  if (radical.is_trivial()) return {InterpolantResult::kNoBasePoints, {}};
  for (const auto& g : radical.gens) {
    if (!g.vars_within((1u << VarS) | (1u << VarT))) continue;
    if (g.deg(VarT) != 1) continue;
    MPoly ct = g.coeff_wrt(VarT, 1);
    if (!ct.is_constant()) continue;
    // g = c*t + h(s)  ->  f = -h/c.
    MPoly h = g.coeff_wrt(VarT, 0);
    MPoly f = h * (Scalar(-1) / ct.constant_value());
    return {InterpolantResult::kFound, f};
  }
  return {InterpolantResult::kConditionFails, {}};
}

std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a,
                                   const std::vector<MPoly>& b) {
  MPoly w = MPoly::var(VarW);
  MPoly one_minus_w = MPoly(1) - w;
  std::vector<MPoly> gens;
  for (const auto& p : a) gens.push_back(w * p);
  for (const auto& p : b) gens.push_back(one_minus_w * p);
  GBasis gb = buchberger(gens, MonomialOrder::lex({VarW, VarT, VarS}));
  std::vector<MPoly> out;
  for (const auto& g : gb.gens)
    if (!g.depends_on(VarW)) out.push_back(g);
  return out;
}

}  // namespace ruledcov
