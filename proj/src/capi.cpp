#include "ruledcov.h"

#include <string>

#include "pipeline.hpp"

struct rc_result {
  int status = RC_ERROR;
  std::string json;
  std::string error;
};

namespace {

rc_result* run(const char* command, const char* input_text) {
  auto* r = new rc_result;
  if (input_text == nullptr) {
    r->error = "null input";
    return r;
  }
  ruledcov::CmdResult res = ruledcov::run_command(command, input_text);
  r->status = res.status;
  r->json = std::move(res.json);
  r->error = std::move(res.error);
  return r;
}

}  // namespace

extern "C" {

rc_result* rc_run_cover(const char* input_text) { return run("cover", input_text); }
rc_result* rc_run_debase(const char* input_text) { return run("debase", input_text); }
rc_result* rc_run_check(const char* input_text) { return run("check", input_text); }
rc_result* rc_run_standardize(const char* input_text) {
  return run("standardize", input_text);
}

int rc_status(const rc_result* r) { return r ? r->status : RC_ERROR; }
const char* rc_json(const rc_result* r) { return r ? r->json.c_str() : ""; }
const char* rc_error_message(const rc_result* r) {
  return r ? r->error.c_str() : "null result";
}

void rc_free(rc_result* r) { delete r; }

const char* rc_version(void) { return "1.0.0"; }

}  // extern "C"
