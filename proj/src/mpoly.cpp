#include "mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace ruledcov {

namespace {
constexpr const char* kVarNames[kNumVars] = {"s", "t", "x", "y", "z", "w"};
}

const char* var_name(int v) { return kVarNames[v]; }

std::optional<int> var_index(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return i;
  return std::nullopt;
}

MPoly::MPoly(const Scalar& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly::MPoly(long n) : MPoly(Scalar(n)) {}

MPoly MPoly::var(int v, int exp) {
  MPoly p;
  Exponents e{};
  e[v] = exp;
  if (exp == 0) return MPoly(1);
  p.terms_.emplace(e, Scalar(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{};
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{} &&
         terms_.begin()->second == 1;
}

Scalar MPoly::constant_value() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int MPoly::deg(int v) const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int td = 0;
    for (int v = 0; v < kNumVars; ++v) td += e[v];
    d = std::max(d, td);
  }
  return d;
}

bool MPoly::vars_within(unsigned mask) const {
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < kNumVars; ++v)
      if (e[v] != 0 && !(mask & (1u << v))) return false;
  return true;
}

MPoly MPoly::lc_wrt(int v) const {
  if (terms_.empty()) throw InternalError("lc_wrt of the zero polynomial");
  return coeff_wrt(v, deg(v));
}

MPoly MPoly::coeff_wrt(int v, int k) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents e2 = e;
    e2[v] = 0;
    out.add_term(e2, c);
  }
  return out;
}

Scalar MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

MPoly MPoly::derivative(int v) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents e2 = e;
    e2[v] -= 1;
    out.add_term(e2, c * Scalar(e[v]));
  }
  return out;
}

const Scalar& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw InternalError("leading_coefficient of zero");
  return terms_.rbegin()->second;
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw InternalError("leading_exponents of zero");
  return terms_.rbegin()->first;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int v = 0; v < kNumVars; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

MPoly MPoly::pow(int e) const {
  MPoly out(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Scalar a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = e != Exponents{};
    if (!has_vars || a != 1) {
      os << a.get_str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << kVarNames[v];
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  MPoly rem = a;
  MPoly quot;
  const Exponents& lb = b.leading_exponents();
  const Scalar& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& la = rem.leading_exponents();
    Exponents e;
    for (int v = 0; v < kNumVars; ++v) {
      e[v] = la[v] - lb[v];
      if (e[v] < 0) return std::nullopt;
    }
    Scalar c = rem.leading_coefficient() / cb;
    MPoly mono;
    mono.add_term(e, c);
    quot += mono;
    rem -= mono * b;
  }
  return quot;
}

namespace {

// The single variable a set of univariate polynomials lives in; -1 when all
// are constant.
int common_uni_var(const std::vector<MPoly>& polys) {
  int var = -1;
  for (const auto& p : polys) {
    for (int v = 0; v < kNumVars; ++v) {
      if (p.deg(v) > 0) {
        if (var != -1 && var != v)
          throw InternalError("uni_gcd: inputs in different variables");
        var = v;
      }
    }
  }
  return var;
}

MPoly uni_rem(MPoly a, const MPoly& b, int v) {
  int db = b.deg(v);
  Scalar lb = b.coeff_wrt(v, db).constant_value();
  while (!a.is_zero() && a.deg(v) >= db) {
    int da = a.deg(v);
    Scalar la = a.coeff_wrt(v, da).constant_value();
    MPoly mono;
    Exponents e{};
    e[v] = da - db;
    mono.add_term(e, la / lb);
    a -= mono * b;
  }
  return a;
}

MPoly uni_gcd2(MPoly a, MPoly b, int v) {
  while (!b.is_zero()) {
    MPoly r = uni_rem(a, b, v);
    a = b;
    b = r;
  }
  return make_monic(a);
}

}  // namespace

MPoly uni_gcd(const std::vector<MPoly>& polys) {
  std::vector<MPoly> nz;
  for (const auto& p : polys)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) throw InternalError("uni_gcd of an all-zero list");
  int v = common_uni_var(nz);
  if (v == -1) return MPoly(1);
  MPoly g = nz[0];
  for (size_t i = 1; i + 0 < nz.size() && !(g.is_constant() && !g.is_zero()); ++i)
    g = uni_gcd2(g, nz[i], v);
  return make_monic(g);
}

MPoly uni_gcd(const MPoly& a, const MPoly& b) { return uni_gcd({a, b}); }

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw InternalError("squarefree_part of zero");
  std::vector<MPoly> nz = {p};
  int v = common_uni_var(nz);
  if (v == -1) return MPoly(1);
  MPoly g = uni_gcd(p, p.derivative(v));
  auto q = exact_div(p, g);
  if (!q) throw InternalError("squarefree_part: gcd does not divide input");
  return make_monic(*q);
}

namespace {

// Highest-index variable occurring in either polynomial; -1 if both constant.
int main_var(const MPoly& a, const MPoly& b) {
  for (int v = kNumVars - 1; v >= 0; --v)
    if (a.deg(v) > 0 || b.deg(v) > 0) return v;
  return -1;
}

MPoly content_wrt(const MPoly& p, int v) {
  std::vector<MPoly> coeffs;
  for (int k = 0; k <= p.deg(v); ++k) {
    MPoly c = p.coeff_wrt(v, k);
    if (!c.is_zero()) coeffs.push_back(c);
  }
  return mv_gcd(coeffs);
}

// Pseudo-remainder of a by b w.r.t. v (both with polynomial coefficients).
MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
  int db = b.deg(v);
  MPoly lb = b.lc_wrt(v);
  while (!a.is_zero() && a.deg(v) >= db) {
    int da = a.deg(v);
    MPoly la = a.lc_wrt(v);
    MPoly shift = MPoly::var(v, da - db);
    a = a * lb - la * shift * b;
  }
  return a;
}

}  // namespace

MPoly mv_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InternalError("mv_gcd(0, 0)");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  int v = main_var(a, b);
  if (v == -1) return MPoly(1);
  // Univariate fast path (rational coefficients, plain Euclid).
  unsigned mask = 1u << v;
  if (a.vars_within(mask) && b.vars_within(mask)) return uni_gcd2(a, b, v);

  MPoly ca = content_wrt(a, v);
  MPoly cb = content_wrt(b, v);
  MPoly pa = *exact_div(a, ca);
  MPoly pb = *exact_div(b, cb);
  MPoly cg = mv_gcd(ca, cb);

  // Primitive PRS on the primitive parts.
  while (!pb.is_zero()) {
    MPoly r = pseudo_rem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = MPoly();
    } else {
      pb = *exact_div(r, content_wrt(r, v));
    }
  }
  if (pa.deg(v) > 0) pa = *exact_div(pa, content_wrt(pa, v));
  return make_monic(cg * pa);
}

MPoly mv_gcd(const std::vector<MPoly>& polys) {
  MPoly g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = any ? mv_gcd(g, p) : make_monic(p);
    any = true;
    if (g.is_one()) break;
  }
  if (!any) throw InternalError("mv_gcd of an all-zero list");
  return g;
}

MPoly mv_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InternalError("mv_lcm with zero input");
  MPoly g = mv_gcd(a, b);
  return make_monic(*exact_div(a * b, g));
}

MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  MPoly out = p;
  out *= Scalar(1) / p.leading_coefficient();
  return out;
}

MPoly primitive_positive(const MPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Scalar scale(den_lcm, num_gcd);
  scale.canonicalize();
  MPoly out = p;
  out *= scale;
  if (out.leading_coefficient() < 0) out *= Scalar(-1);
  return out;
}

int max_root_multiplicity(const MPoly& q) {
  if (q.is_zero()) throw InternalError("max_root_multiplicity of zero");
  MPoly g = q;
  int mult = 0;
  std::vector<MPoly> probe = {g};
  int v = common_uni_var(probe);
  if (v == -1) return 0;
  while (g.deg(v) > 0) {
    ++mult;
    g = uni_gcd(g, g.derivative(v));
  }
  return mult;
}

}  // namespace ruledcov
