#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pflc/error.hpp"
#include "report.hpp"
#include "workspace.hpp"

namespace pflc::cli {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitEngine = 3 };

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::uint64_t> seed;
};

/// 2 for parse and validation failures, 3 for engine errors.
int exit_code_for(ErrorCode code) noexcept;

/// Runs one command against a loaded workspace. Throws pflc::Error.
Report execute(const Invocation& inv, const Workspace& ws);

/// Full command line handling: parses argv, loads the workspace, executes,
/// writes the report to --out or `out`, and maps errors to exit codes with a
/// message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pflc::cli
