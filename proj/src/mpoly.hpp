#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scalar.hpp"

namespace ruledcov {

// Fixed global variable universe, ordered s < t < x < y < z < w.
inline constexpr int kNumVars = 6;
enum : int { VarS = 0, VarT = 1, VarX = 2, VarY = 3, VarZ = 4, VarW = 5 };

// Degree of the zero polynomial.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Common variable masks (bit i = variable index i).
inline constexpr unsigned kVarsST = (1u << VarS) | (1u << VarT);
inline constexpr unsigned kVarsXYZ = (1u << VarX) | (1u << VarY) | (1u << VarZ);

const char* var_name(int v);
std::optional<int> var_index(std::string_view name);

using Exponents = std::array<int, kNumVars>;

// Sparse multivariate polynomial over Scalar. No zero coefficients are ever
// stored; the term map is keyed by exponent vectors compared lexicographically
// in the global variable order, and canonical printing walks it in descending
// order.
class MPoly {
public:
  using TermMap = std::map<Exponents, Scalar>;

  MPoly() = default;
  explicit MPoly(const Scalar& c);
  MPoly(long n);  // NOLINT: implicit integer constants read naturally in tests
  static MPoly var(int v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant term (zero polynomial yields 0).
  Scalar constant_value() const;

  int deg(int v) const;
  int total_degree() const;
  bool depends_on(int v) const { return deg(v) > 0; }
  // True when the polynomial uses no variables outside `mask` (bit i = var i).
  bool vars_within(unsigned mask) const;

  // Coefficient of the highest power of v, a polynomial in the remaining
  // variables. Requires a nonzero polynomial.
  MPoly lc_wrt(int v) const;
  MPoly coeff_wrt(int v, int k) const;
  Scalar coeff(const Exponents& e) const;
  MPoly derivative(int v) const;

  // Leading term under the canonical (descending lex) order.
  const Scalar& leading_coefficient() const;
  const Exponents& leading_exponents() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  MPoly pow(int e) const;  // e >= 0

  bool operator==(const MPoly& o) const = default;

  const TermMap& terms() const { return terms_; }
  void add_term(const Exponents& e, const Scalar& c);

  std::string str() const;

private:
  TermMap terms_;
};

// Exact multivariate division; nullopt when b does not divide a.
std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);

// Monic gcd of univariate polynomials sharing one variable; zero entries are
// ignored, an all-zero list is an error.
MPoly uni_gcd(const std::vector<MPoly>& polys);
MPoly uni_gcd(const MPoly& a, const MPoly& b);

// p / gcd(p, p'), monic. Requires p nonzero and univariate.
MPoly squarefree_part(const MPoly& p);

// Multivariate gcd by content/primitive-part recursion, leading coefficient
// normalized to 1.
MPoly mv_gcd(const MPoly& a, const MPoly& b);
MPoly mv_gcd(const std::vector<MPoly>& polys);
MPoly mv_lcm(const MPoly& a, const MPoly& b);

MPoly make_monic(const MPoly& p);
// Scale to integer coefficients with content 1 and positive leading
// coefficient under the canonical order.
MPoly primitive_positive(const MPoly& p);

// Maximum multiplicity among the roots of a univariate q, via the gcd chain
// q, gcd(q,q'), gcd(gcd(q,q'), ...).
int max_root_multiplicity(const MPoly& q);

}  // namespace ruledcov
