#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace morsenov::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInput = 3, kInconsistency = 4 };

struct CommandResult {
  int exit_code = kOk;
  /// {"status": "ok" | "error", "payload": ..., "provenance": [...]};
  /// error envelopes also carry {"error": {"code", "message"}}.
  nlohmann::json envelope;
  /// Help text, when the invocation asked for it instead of a command.
  std::string help;
  bool pretty = false;
};

/// argv[0] is the program name, as with main().
CommandResult run(const std::vector<std::string>& argv);

std::string render(const CommandResult& result);

}  // namespace morsenov::cli
