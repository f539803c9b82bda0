#pragma once

// Shared fixture inputs: three ruled surfaces of degrees 3, 5, 4 with their
// implicit equations, one general parametrization with four base points, and
// four classic implicitization-benchmark parametrizations with base points.

#include <array>
#include <string>

#include "mpoly.hpp"
#include "parser.hpp"
#include "ratfn.hpp"

namespace fixtures {

// ---- degree-3 ruled surface ----
inline const char* kDeg3X = "(t*(s^2+s+1)+s)/(s*(s-1))";
inline const char* kDeg3Y = "(t*(s^2+2*s)+s)/(s*(s-1))";
inline const char* kDeg3Z = "(t*(s^2+1)+s)/(s*(s-1))";
inline const char* kDeg3F =
    "5*x^3-9*x^2*y-8*x^2*z+5*x*y^2+11*x*y*z+3*x*z^2-y^3-3*y^2*z-3*y*z^2"
    "-4*x^2+4*x*y+4*x*z-y^2-2*y*z-z^2";
// after base-point removal
inline const char* kDeg3FreeX = "(s^2*t+s*t+t+1)/(s-1)";
inline const char* kDeg3FreeY = "(s^2*t+2*s*t+1)/(s-1)";
inline const char* kDeg3FreeZ = "(s^2*t+t+1)/(s-1)";
// second chart
inline const char* kDeg3HX = "(s^3*t-2*s^3-s^2-2*s-t)/((s^2+1)*(s-1))";
inline const char* kDeg3HY = "-(s^3-2*s^2*t+2*s^2+s*t+2*s+t)/((s^2+1)*(s-1))";
inline const char* kDeg3HZ = "(s*t-2*s-t)/(s-1)";

// ---- degree-5 ruled surface ----
inline const char* kDeg5X = "(t*s^3+2*s^2+1)/(s^2-1)";
inline const char* kDeg5Y = "(t*(s^3+2)+s+1)/(s^2-1)";
inline const char* kDeg5Z = "(t*(s^3+s+1)+1)/(s^2-1)";
inline const char* kDeg5F =
    "9*x^5-45*x^4*y-24*x^4*z+77*x^3*y^2+80*x^3*y*z-15*x^3*z^2-83*x^2*y^3"
    "+34*x^2*y^2*z-147*x^2*y*z^2+78*x^2*z^3+66*x*y^4-60*x*y^3*z"
    "-189*x*y^2*z^2+460*x*y*z^3-236*x*z^4+16*y^5-86*y^4*z+111*y^3*z^2"
    "+118*y^2*z^3-332*y*z^4+168*z^5-104*x^4+319*x^3*y+108*x^3*z"
    "-207*x^2*y^2-621*x^2*y*z+452*x^2*z^2+147*x*y^3-382*x*y^2*z"
    "+1034*x*y*z^2-848*x*z^3+297*y^4-1549*y^3*z+3390*y^2*z^2-3380*y*z^3"
    "+1344*z^4+304*x^3-741*x^2*y+389*x^2*z-267*x*y^2+1761*x*y*z"
    "-2314*x*z^2-4*y^3+922*y^2*z-1930*z^2*y+1816*z^3-70*x^2+597*y*x"
    "-2060*z*x+748*y^2-1703*z*y+2940*z^2-761*x-62*y+2085*z+746";
inline const char* kDeg5HX =
    "-(s^5+s^4+2*s^3-t*s^2+4*s^2+t+2)/((s^3+s^2+1)*(s^2-1))";
inline const char* kDeg5HY =
    "(2*s^5*t-3*s^5-2*s^4-2*t*s^3-s^3+t*s^2-2*s^2-s-t)"
    "/((s^3+s^2+1)*(s^2-1))";
inline const char* kDeg5HZ = "(t*s^2-2*s^2-t)/(s^2-1)";

// ---- degree-4 ruled surface (normal) ----
inline const char* kDeg4X = "(t*s+(-3*s+2)*s^5)/((s-1)*s^2)";
inline const char* kDeg4Y = "(t*(s+1)+(-5*s+3)*s^2)/((s-1)*s^2)";
inline const char* kDeg4Z = "(t*(s+2)+(-8*s+5)*s^2)/((s-1)*s^2)";
inline const char* kDeg4F =
    "x*y^3-3*y^2*z*x+3*x*y*z^2-x*z^3-2*y^4+7*z*y^3-9*y^2*z^2+5*y*z^3-z^4"
    "-9*y^2*x+18*z*y*x-9*z^2*x-5*y^3-9*y^2*z+16*z^2*y-5*z^3+27*y*x-27*z*x"
    "-78*y^2+89*z*y-23*z^2-27*x-14*y+17*z+12";
inline const char* kDeg4FreeX = "-(3*s^2+s-t+1)*s";
inline const char* kDeg4FreeY = "t*s+t-4";
inline const char* kDeg4FreeZ = "t*s+2*t-7";

// ---- general parametrization with base points (0,0),(2,1),(1,2),(1,-1) ----
inline const char* kGenDen = "2*s^2+8*s*t+3*t^2-8*s-11*t";
inline const char* kGenX = "(4*s^2-4*s*t+t^2-6*s+3*t)/(2*s^2+8*s*t+3*t^2-8*s-11*t)";
inline const char* kGenY = "(s^2-6*s*t-t^2+s+7*t)/(2*s^2+8*s*t+3*t^2-8*s-11*t)";
inline const char* kGenZ =
    "(-3*s^2+22*s*t+4*t^2-5*s-26*t)/(2*s^2+8*s*t+3*t^2-8*s-11*t)";
inline const char* kGenInterpolant = "-s^3+3/2*s^2+1/2*s";
// radical of the base-point ideal before and after the shear s -> s+t
inline const std::array<const char*, 3> kGenRadical = {
    "s^3-3*s^2+2*s", "-s^2+2*s*t+s-2*t", "2*s^2+t^2-4*s-t"};
inline const std::array<const char*, 2> kGenRadicalSheared = {
    "s^4-2*s^3-s^2+2*s", "2*s^3-3*s^2-s+2*t"};

// ---- implicitization-benchmark parametrizations ----
inline const char* kBench1X = "(s*t^2-t^3-t)/(t^2-2*t+1)";
inline const char* kBench1Y = "(t^3-s*t-t^2+t+1)/(t^2-2*t+1)";
inline const char* kBench1Z = "(s*t-2*t)/(t^2-2*t+1)";
inline const char* kBench1Interpolant = "1";

inline const char* kBench6X = "(s*(s+t-1))/(s^2+s*t+t^2-1)";
inline const char* kBench6Y = "(t*(s+t-1))/(s^2+s*t+t^2-1)";
inline const char* kBench6Z = "(s+t-1)/(s^2+s*t+t^2-1)";
inline const char* kBench6Interpolant = "1-s";

inline const char* kBench9X =
    "(s^2*t+2*t^3+s^2+4*s*t+4*t^2+3*s+2*t+2)"
    "/(s^3+s^2*t+t^3+s^2+t^2-s-t-1)";
inline const char* kBench9Y =
    "(-s^3-2*s*t^2-2*s^2-s*t+s-2*t+2)/(s^3+s^2*t+t^3+s^2+t^2-s-t-1)";
inline const char* kBench9Z =
    "(-s^3-2*s^2*t-3*s*t^2-3*s^2-3*s*t+2*t^2-2*s-2*t)"
    "/(s^3+s^2*t+t^3+s^2+t^2-s-t-1)";
inline const char* kBench9Interpolant =
    "-555/1096*s^5-191/1644*s^4+269/411*s^3-4939/3288*s^2-385/822*s"
    "+1067/822";
inline const std::array<const char*, 2> kBench9Radical = {
    "9*s^6+8*s^5-12*s^4+27*s^3+34*s^2-44*s-40",
    "1665*s^5+382*s^4-2152*s^3+4939*s^2+1540*s+3288*t-4268"};

inline const char* kBench10X =
    "(-s^4+4*s^3*t-2*s^2*t^2+s*t^3+s^2*t-2*t^3)"
    "/(-s^3*t+6*s^2*t^2-3*s*t^3+t^4+s^3-2*s*t^2)";
inline const char* kBench10Y =
    "(-s^3*t-2*s^3+s^2*t+3*s*t^2-t^3)"
    "/(-s^3*t+6*s^2*t^2-3*s*t^3+t^4+s^3-2*s*t^2)";
inline const char* kBench10Z =
    "(-s*t^3+s^3-4*s^2*t-s*t^2+6*t^3)"
    "/(-s^3*t+6*s^2*t^2-3*s*t^3+t^4+s^3-2*s*t^2)";
inline const char* kBench10Interpolant =
    "176/703*s^5-1205/703*s^4-3605/703*s^3+29867/703*s^2-2371/703*s";
inline const std::array<const char*, 2> kBench10Radical = {
    "s^6-7*s^5-20*s^4+173*s^3-27*s^2+s",
    "-176*s^5+1205*s^4+3605*s^3-29867*s^2+2371*s+703*t"};

// ---- helpers ----
inline ruledcov::RatFn rf(const char* text) {
  return ruledcov::parse_expr(text, ruledcov::kVarsST);
}
inline std::array<ruledcov::RatFn, 3> comps(const char* x, const char* y,
                                            const char* z) {
  return {rf(x), rf(y), rf(z)};
}
inline ruledcov::MPoly impl(const char* text) {
  ruledcov::RatFn f = ruledcov::parse_expr(text, ruledcov::kVarsXYZ);
  return f.num();  // implicit equations are polynomial
}
inline ruledcov::MPoly stpoly(const char* text) { return rf(text).num(); }

inline std::string doc(const char* x, const char* y, const char* z,
                       const char* F = nullptr, long seed = 0) {
  std::string out;
  out += std::string("x = ") + x + "\n";
  out += std::string("y = ") + y + "\n";
  out += std::string("z = ") + z + "\n";
  if (F) out += std::string("F = ") + F + "\n";
  out += "seed = " + std::to_string(seed) + "\n";
  return out;
}

}  // namespace fixtures
