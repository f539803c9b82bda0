#pragma once

#include <map>
#include <string>

#include "mpoly.hpp"

namespace ruledcov {

// Rational function num/den, always normalized: gcd(num, den) = 1, den has
// integer coprime coefficients with positive leading coefficient (den = 1 when
// constant). Guarantees deterministic printing.
class RatFn {
public:
  RatFn() : num_(), den_(1) {}
  RatFn(MPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT
  RatFn(MPoly n, MPoly d);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn pow(int e) const;  // negative e inverts

  bool operator==(const RatFn& o) const = default;

  std::string str() const;

private:
  void normalize();
  MPoly num_, den_;
};

// Exact composition: every variable in `bindings` is replaced by the given
// rational function; unbound variables stay themselves.
RatFn substitute(const RatFn& f, const std::map<int, RatFn>& bindings);
RatFn substitute_poly(const MPoly& p, const std::map<int, RatFn>& bindings);

// Exact evaluation; throws PoleError when the denominator vanishes.
Scalar eval(const RatFn& f, const std::map<int, Scalar>& point);
Scalar eval_poly(const MPoly& p, const std::map<int, Scalar>& point);

}  // namespace ruledcov
