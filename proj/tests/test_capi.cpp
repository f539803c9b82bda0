#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include "fixtures.hpp"
#include "ruledcov.h"

namespace {

using Handle = std::unique_ptr<rc_result, void (*)(rc_result*)>;

Handle wrap(rc_result* r) { return Handle(r, rc_free); }

}  // namespace

TEST_CASE("cover run over the C boundary") {
  std::string doc = fixtures::doc(fixtures::kDeg3X, fixtures::kDeg3Y,
                                  fixtures::kDeg3Z);
  Handle r = wrap(rc_run_cover(doc.c_str()));
  CHECK(rc_status(r.get()) == RC_OK);
  std::string json = rc_json(r.get());
  CHECK(json.find("\"normal\": false") != std::string::npos);
  CHECK(json.find("\"secondary\"") != std::string::npos);
  CHECK(std::string(rc_error_message(r.get())).empty());
}

TEST_CASE("status codes partition outcomes") {
  Handle not_ruled = wrap(rc_run_cover("x = t^2\ny = t\nz = s\n"));
  CHECK(rc_status(not_ruled.get()) == RC_NOT_RULED);
  CHECK(!std::string(rc_error_message(not_ruled.get())).empty());
  CHECK(std::string(rc_json(not_ruled.get())).empty());

  Handle parse_fail = wrap(rc_run_cover("x = $\ny = t\nz = s\n"));
  CHECK(rc_status(parse_fail.get()) == RC_ERROR);

  Handle off_surface = wrap(rc_run_check("x = s\ny = t\nz = 1\nF = z\n"));
  CHECK(rc_status(off_surface.get()) == RC_CHECK_FAILED);

  Handle missing_f = wrap(rc_run_check("x = s\ny = t\nz = 0\n"));
  CHECK(rc_status(missing_f.get()) == RC_ERROR);

  Handle null_input = wrap(rc_run_cover(nullptr));
  CHECK(rc_status(null_input.get()) == RC_ERROR);
}

TEST_CASE("check passes on a real surface") {
  std::string doc = fixtures::doc(fixtures::kDeg3X, fixtures::kDeg3Y,
                                  fixtures::kDeg3Z, fixtures::kDeg3F);
  Handle r = wrap(rc_run_check(doc.c_str()));
  CHECK(rc_status(r.get()) == RC_OK);
  std::string json = rc_json(r.get());
  CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("debase run over the C boundary") {
  std::string doc = fixtures::doc(fixtures::kGenX, fixtures::kGenY,
                                  fixtures::kGenZ);
  Handle r = wrap(rc_run_debase(doc.c_str()));
  CHECK(rc_status(r.get()) == RC_OK);
  std::string json = rc_json(r.get());
  CHECK(json.find("\"interpolant\"") != std::string::npos);
  CHECK(json.find("s^3") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  std::string doc = fixtures::doc(fixtures::kDeg5X, fixtures::kDeg5Y,
                                  fixtures::kDeg5Z, nullptr, 7);
  Handle a = wrap(rc_run_cover(doc.c_str()));
  Handle b = wrap(rc_run_cover(doc.c_str()));
  CHECK(std::string(rc_json(a.get())) == std::string(rc_json(b.get())));
  CHECK(rc_status(a.get()) == RC_OK);

  Handle c = wrap(rc_run_standardize(doc.c_str()));
  Handle d = wrap(rc_run_standardize(doc.c_str()));
  CHECK(std::string(rc_json(c.get())) == std::string(rc_json(d.get())));
}

TEST_CASE("version string") {
  CHECK(std::string(rc_version()).find('.') != std::string::npos);
}
