#pragma once

#include <gmpxx.h>

#include <string>

namespace ruledcov {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// after every arithmetic operation, which is exactly the invariant we need.
using Scalar = mpq_class;

inline std::string scalar_str(const Scalar& s) { return s.get_str(); }

inline int scalar_sgn(const Scalar& s) { return sgn(s); }

inline Scalar scalar_of(long num, long den = 1) { return Scalar(num, den); }

}  // namespace ruledcov
