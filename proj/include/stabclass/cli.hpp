#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabclass/report.hpp"

namespace stabclass {

struct DecideOptions {
  std::string group_a;
  std::string group_b;
  unsigned prime = 2;
  std::optional<std::string> json_path;
  std::size_t max_order = 400;
  bool check_props = false;
};

struct VerifyOptions {
  std::size_t max_order = 8;
  /// A prime or "all".
  std::string prime = "all";
  std::optional<std::string> json_path;
  /// Swaps two tilde-class labels before checking; every run with a
  /// multi-class table must then fail.
  bool corrupt_fixture = false;
};

struct InspectOptions {
  std::string group;
  unsigned prime = 2;
  std::optional<std::string> q;
  std::optional<std::string> json_path;
};

struct CommandResult {
  int exit_code = 0;
  std::string text;
  Json document;
};

CommandResult cmd_decide(const DecideOptions& opts, const std::vector<std::string>& command = {});
CommandResult cmd_verify(const VerifyOptions& opts, const std::vector<std::string>& command = {});
CommandResult cmd_inspect(const InspectOptions& opts, const std::vector<std::string>& command = {});

/// Parses argv, runs the subcommand, prints the human report to `out` and
/// writes --json when given. Returns 0/1 for the verdict, 2 on errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabclass
