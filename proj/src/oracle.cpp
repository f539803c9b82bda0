#include "oracle.hpp"

#include <random>

#include "errors.hpp"

namespace ruledcov {

namespace {

std::string point_str(const Point3& pt) {
  return "(" + scalar_str(pt[0]) + ", " + scalar_str(pt[1]) + ", " +
         scalar_str(pt[2]) + ")";
}

}  // namespace

bool implicit_check(const std::array<RatFn, 3>& components, const MPoly& F) {
  std::map<int, RatFn> bind = {
      {VarX, components[0]}, {VarY, components[1]}, {VarZ, components[2]}};
  return substitute_poly(F, bind).is_zero();
}

bool point_reachable(const std::array<RatFn, 3>& components, const Point3& pt) {
  std::vector<MPoly> gens;
  MPoly prod(1);
  for (int i = 0; i < 3; ++i) {
    gens.push_back(components[i].num() - MPoly(pt[i]) * components[i].den());
    prod *= components[i].den();
  }
  gens.push_back(MPoly::var(VarW) * prod - MPoly(1));
  GBasis gb = buchberger(std::move(gens), MonomialOrder::lex({VarW, VarT, VarS}));
  return !gb.is_trivial();
}

std::vector<Point3> sample_points(const std::array<RatFn, 3>& components,
                                  unsigned long seed, int n, int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(-50, 50);
  std::uniform_int_distribution<long> denom(1, 12);
  std::vector<Point3> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < n) {
    if (++attempts > max_attempts)
      throw Error(kError, "sample_points: resample budget exhausted");
    Scalar s(numer(rng), denom(rng));
    Scalar t(numer(rng), denom(rng));
    s.canonicalize();
    t.canonicalize();
    std::map<int, Scalar> at = {{VarS, s}, {VarT, t}};
    try {
      out.push_back({eval(components[0], at), eval(components[1], at),
                     eval(components[2], at)});
    } catch (const PoleError&) {
      // hit a denominator zero, draw again
    }
  }
  return out;
}

Verdict cover_crosscheck(const CoverReport& report, const MPoly& F,
                         unsigned long seed, int line_samples) {
  Verdict v;
  auto add = [&v](std::string name, bool pass, std::string witness) {
    if (!pass) v.pass = false;
    v.items.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  };

  std::array<RatFn, 3> primary = report.primary.components();
  add("primary_on_surface", implicit_check(primary, F),
      "implicit equation does not vanish on the primary chart");

  if (!report.secondary) return v;
  const auto& H = *report.secondary;
  add("secondary_on_surface", implicit_check(H, F),
      "implicit equation does not vanish on the secondary chart");

  if (report.line) {
    const Line3& line = *report.line;
    bool section_ok = true;
    std::string section_witness;
    try {
      std::map<int, RatFn> at_s0 = {{VarS, RatFn(MPoly(0))}};
      std::array<RatFn, 3> H0 = {substitute(H[0], at_s0),
                                 substitute(H[1], at_s0),
                                 substitute(H[2], at_s0)};
      std::map<int, RatFn> bind = {{VarX, H0[0]}, {VarY, H0[1]}, {VarZ, H0[2]}};
      for (const MPoly& form : line.forms) {
        if (!substitute_poly(form, bind).is_zero()) {
          section_ok = false;
          section_witness = "line form " + form.str() +
                            " does not vanish on the s=0 section";
          break;
        }
      }
    } catch (const Error& e) {
      section_ok = false;
      section_witness = e.what();
    }
    add("line_section_at_s0", section_ok, std::move(section_witness));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numer(-20, 20);
    std::uniform_int_distribution<long> denom(1, 7);
    bool all_reachable = true;
    std::string reach_witness;
    for (int i = 0; i < line_samples; ++i) {
      Scalar u(numer(rng), denom(rng));
      u.canonicalize();
      Point3 pt;
      for (int j = 0; j < 3; ++j) pt[j] = line.point[j] + u * line.dir[j];
      if (!point_reachable(H, pt)) {
        all_reachable = false;
        reach_witness = "line point " + point_str(pt) +
                        " not reachable by the secondary chart";
        break;
      }
    }
    add("line_points_reachable", all_reachable, std::move(reach_witness));
  }
  return v;
}

}  // namespace ruledcov
