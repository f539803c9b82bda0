#pragma once

#include <array>
#include <string>
#include <vector>

#include "ruledcover.hpp"

namespace ruledcov {

using Point3 = std::array<Scalar, 3>;

// True iff F(x,y,z) vanishes identically after substituting the components
// (exact symbolic composition).
bool implicit_check(const std::array<RatFn, 3>& components, const MPoly& F);

// Reachability over the algebraic closure: the ideal
// {num_i - pt_i*den_i, w*(product of denominators) - 1} in s,t,w is
// nontrivial iff some parameter value maps to pt.
bool point_reachable(const std::array<RatFn, 3>& components, const Point3& pt);

// n exact surface points from seeded rational (s,t) pairs; poles are
// resampled. Deterministic per seed.
std::vector<Point3> sample_points(const std::array<RatFn, 3>& components,
                                  unsigned long seed, int n,
                                  int max_attempts = 256);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // failure detail, empty on pass
};

struct Verdict {
  bool pass = true;
  std::vector<CheckItem> items;
};

// Verifies a covering report against the surface's implicit equation F:
// primary membership, secondary membership, the s=0 section of the secondary
// lying on the critical line, and seeded line points being reachable by the
// secondary chart.
Verdict cover_crosscheck(const CoverReport& report, const MPoly& F,
                         unsigned long seed, int line_samples = 10);

}  // namespace ruledcov
