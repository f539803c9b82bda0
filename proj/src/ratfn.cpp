#include "ratfn.hpp"

#include "errors.hpp"

namespace ruledcov {

RatFn::RatFn(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw Error(kError, "zero denominator");
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = mv_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *exact_div(num_, g);
    den_ = *exact_div(den_, g);
  }
  if (den_.is_constant()) {
    Scalar c = den_.constant_value();
    num_ *= Scalar(1) / c;
    den_ = MPoly(1);
    return;
  }
  MPoly dprim = primitive_positive(den_);
  // Scale numerator by the same factor that carried den to dprim.
  Scalar factor = dprim.leading_coefficient() / den_.leading_coefficient();
  num_ *= factor;
  den_ = dprim;
}

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(kError, "division by zero rational function");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw Error(kError, "negative power of zero");
    return RatFn(den_, num_).pow(-e);
  }
  RatFn out = MPoly(1);
  RatFn base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::string RatFn::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFn substitute_poly(const MPoly& p, const std::map<int, RatFn>& bindings) {
  // Cache powers of each bound variable's image.
  std::map<int, std::vector<RatFn>> powers;
  for (const auto& [v, f] : bindings) powers[v] = {RatFn(MPoly(1)), f};

  RatFn acc{MPoly()};
  for (const auto& [e, c] : p.terms()) {
    MPoly mono;
    Exponents rest = e;
    for (const auto& [v, f] : bindings) rest[v] = 0;
    mono.add_term(rest, c);
    RatFn term{mono};
    for (auto& [v, pw] : powers) {
      int k = e[v];
      while ((int)pw.size() <= k) pw.push_back(pw.back() * pw[1]);
      if (k > 0) term = term * pw[k];
    }
    acc = acc + term;
  }
  return acc;
}

RatFn substitute(const RatFn& f, const std::map<int, RatFn>& bindings) {
  RatFn n = substitute_poly(f.num(), bindings);
  RatFn d = substitute_poly(f.den(), bindings);
  if (d.is_zero())
    throw Error(kError, "substitution makes the denominator identically zero");
  return n / d;
}

Scalar eval_poly(const MPoly& p, const std::map<int, Scalar>& point) {
  Scalar acc(0);
  for (const auto& [e, c] : p.terms()) {
    Scalar term = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      auto it = point.find(v);
      if (it == point.end())
        throw Error(kError, std::string("eval: unbound variable ") + var_name(v));
      for (int k = 0; k < e[v]; ++k) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

Scalar eval(const RatFn& f, const std::map<int, Scalar>& point) {
  Scalar d = eval_poly(f.den(), point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return eval_poly(f.num(), point) / d;
}

}  // namespace ruledcov
