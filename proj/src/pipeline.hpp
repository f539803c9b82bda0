#pragma once

#include <string>

#include "parser.hpp"

namespace ruledcov {

// Outcome of one CLI-level command. `json` is the payload on success;
// `error` is set instead when status != 0 (except kCheckFailed, which still
// carries the verdict payload).
struct CmdResult {
  int status = 0;
  std::string json;
  std::string error;
};

CmdResult cmd_cover(const InputDoc& doc);
CmdResult cmd_debase(const InputDoc& doc);
CmdResult cmd_check(const InputDoc& doc);
CmdResult cmd_standardize(const InputDoc& doc);

// Dispatch by command name over raw input-document text. Parse failures are
// reported through CmdResult, never thrown.
CmdResult run_command(const std::string& command, const std::string& input_text);

}  // namespace ruledcov
