#pragma once

// JSON-in / JSON-out command dispatch shared by the executable and the Python
// module.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace phin {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_input = 1,
  exit_unsupported = 2,
  exit_internal = 3,
};

struct SessionConfig {
  unsigned long p = 2;
  std::optional<std::size_t> n;  // inferred from the payload when absent
  std::optional<std::size_t> f;
  std::string command;
  std::optional<std::string> input_path;  // stdin when neither this nor payload is set
  std::optional<std::string> payload;
  std::optional<std::string> output_path;  // stdout when absent
  bool batch = false;
};

struct CommandResult {
  int exit_code = exit_ok;
  nlohmann::json body;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed payload.  Never throws: failures come back as
/// {"error": {"kind", "message", ...}} with the matching exit code.
CommandResult run_command(const std::string& command, const nlohmann::json& payload, const SessionConfig& config);

/// Reads the payload, runs it (item by item in batch mode, concurrently,
/// output order preserved) and returns the exit code with the canonical JSON
/// text.  The batch exit code is the largest item exit code.
struct SessionOutput {
  int exit_code = exit_ok;
  std::string text;
};
SessionOutput run_session(const SessionConfig& config, std::istream& in);

}  // namespace phin
