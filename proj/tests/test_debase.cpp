#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debase.hpp"
#include "errors.hpp"
#include "fixtures.hpp"

using namespace ruledcov;
using fixtures::comps;
using fixtures::stpoly;

namespace {

SurfaceParam make(const char* x, const char* y, const char* z) {
  return SurfaceParam::from_components(comps(x, y, z));
}

GBasis gb_of(std::initializer_list<const char*> gens) {
  std::vector<MPoly> v;
  for (const char* g : gens) v.push_back(stpoly(g));
  return buchberger(v, order_t_s());
}

}  // namespace

TEST_CASE("common denominator form and conditions") {
  SurfaceParam P = make(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ);
  CHECK(P.q == stpoly(fixtures::kGenDen));
  CHECK(P.condition1());
  CHECK(P.condition2());
  CHECK(P.components() == comps(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ));

  SurfaceParam uneven = make(fixtures::kBench1X, fixtures::kBench1Y,
                             fixtures::kBench1Z);
  CHECK(!uneven.condition1());  // numerator degrees 3,3,2 vs denominator 2
}

TEST_CASE("gcd cancellation") {
  SurfaceParam P = make("(s*t)/(s*(t+1))", "(s*s)/(s*(t+1))", "s/(s*(t+1))");
  CHECK(P.q == stpoly("t+1"));
  CHECK(P.p[0] == stpoly("t"));
}

TEST_CASE("condition enforcement") {
  SurfaceParam uneven = make(fixtures::kBench1X, fixtures::kBench1Y,
                             fixtures::kBench1Z);
  std::vector<Subst> log;
  SurfaceParam fixed = enforce_condition1(uneven, 0, log);
  CHECK(fixed.condition1());
  REQUIRE(log.size() == 1);
  auto [s_id, t_id] = log[0].compose_with_inverse();
  CHECK(s_id == fixtures::rf("s"));
  CHECK(t_id == fixtures::rf("t"));

  std::vector<Subst> log2;
  SurfaceParam already = make(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ);
  CHECK(enforce_condition1(already, 0, log2).condition1());
  CHECK(log2.empty());
}

TEST_CASE("base point report") {
  SurfaceParam P = make(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ);
  GBasis rad = base_point_report(P);
  GBasis published = gb_of({fixtures::kGenRadical[0], fixtures::kGenRadical[1],
                            fixtures::kGenRadical[2]});
  CHECK(ideal_equal(rad, published));
  CHECK(find_interpolant(rad).kind == InterpolantResult::kConditionFails);
}

TEST_CASE("main example: shear then cubic interpolant") {
  SurfaceParam P = make(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ);
  DebaseResult r = remove_base_points_general(P, 0);
  REQUIRE(r.interpolant.has_value());
  CHECK(*r.interpolant == stpoly(fixtures::kGenInterpolant));
  REQUIRE(r.shears.size() == 1);
  CHECK(r.shears[0] == 1);
  CHECK(base_point_report(r.out).is_trivial());
  CHECK(ideal_equal(base_point_report(P),
                    gb_of({fixtures::kGenRadical[0], fixtures::kGenRadical[1],
                           fixtures::kGenRadical[2]})));
}

TEST_CASE("post-shear radical matches the published basis") {
  SurfaceParam P = make(fixtures::kGenX, fixtures::kGenY, fixtures::kGenZ);
  SurfaceParam sheared;
  std::map<int, RatFn> shear = {{VarS, fixtures::rf("s+t")}};
  std::array<RatFn, 3> mapped;
  auto cs = P.components();
  for (int i = 0; i < 3; ++i) mapped[i] = substitute(cs[i], shear);
  sheared = SurfaceParam::from_components(mapped);
  GBasis rad = base_point_report(sheared);
  CHECK(ideal_equal(rad, gb_of({fixtures::kGenRadicalSheared[0],
                                fixtures::kGenRadicalSheared[1]})));
  InterpolantResult f = find_interpolant(rad);
  REQUIRE(f.kind == InterpolantResult::kFound);
  CHECK(f.f == stpoly(fixtures::kGenInterpolant));
}

TEST_CASE("benchmark parametrizations reproduce the known interpolants") {
  struct Case {
    const char *x, *y, *z, *f;
  };
  const Case cases[] = {
      {fixtures::kBench1X, fixtures::kBench1Y, fixtures::kBench1Z,
       fixtures::kBench1Interpolant},
      {fixtures::kBench6X, fixtures::kBench6Y, fixtures::kBench6Z,
       fixtures::kBench6Interpolant},
      {fixtures::kBench9X, fixtures::kBench9Y, fixtures::kBench9Z,
       fixtures::kBench9Interpolant},
      {fixtures::kBench10X, fixtures::kBench10Y, fixtures::kBench10Z,
       fixtures::kBench10Interpolant},
  };
  for (const Case& c : cases) {
    CAPTURE(c.x);
    SurfaceParam P = make(c.x, c.y, c.z);
    DebaseResult r = remove_base_points_general(P, 0);
    REQUIRE(r.interpolant.has_value());
    CHECK(*r.interpolant == stpoly(c.f));
    CHECK(r.shears.empty());
    CHECK(base_point_report(r.out).is_trivial());
  }
}

TEST_CASE("benchmark radicals match the published bases") {
  SurfaceParam P9 = make(fixtures::kBench9X, fixtures::kBench9Y,
                         fixtures::kBench9Z);
  CHECK(ideal_equal(base_point_report(P9),
                    gb_of({fixtures::kBench9Radical[0],
                           fixtures::kBench9Radical[1]})));
  SurfaceParam P10 = make(fixtures::kBench10X, fixtures::kBench10Y,
                          fixtures::kBench10Z);
  CHECK(ideal_equal(base_point_report(P10),
                    gb_of({fixtures::kBench10Radical[0],
                           fixtures::kBench10Radical[1]})));
}

TEST_CASE("base-point-free inputs pass through unchanged") {
  SurfaceParam P = make(fixtures::kDeg3FreeX, fixtures::kDeg3FreeY,
                        fixtures::kDeg3FreeZ);
  DebaseResult r = remove_base_points_general(P, 0);
  CHECK(!r.interpolant.has_value());
  CHECK(r.iterations == 0);
  CHECK(r.out.components() == P.components());
  CHECK(r.base_points_before.is_trivial());
}

TEST_CASE("degenerate gcd inputs are rejected") {
  SurfaceParam P = make("s/(s*t)", "(s*t)/(s*t)", "(s*s)/(s*t)");
  P.p[0] = P.p[0] * stpoly("s");  // force a common factor behind cancel_gcd
  P.p[1] = P.p[1] * stpoly("s");
  P.p[2] = P.p[2] * stpoly("s");
  P.q = P.q * stpoly("s");
  CHECK_THROWS_AS(base_point_report(P), NotZeroDimensionalError);
}
