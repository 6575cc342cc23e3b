#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "catalg/document.hpp"

namespace catalg {

struct CliOptions {
  bool json = false;
  double tol = 1e-9;
  std::size_t verify = 100;
  std::uint64_t seed = 1;
};

struct CommandResult {
  Json report;
  std::string text;
  int status = 0;  ///< 0 ok, 1 a check failed
};

CommandResult cmd_validate(const CatSpecDocument& doc, const CliOptions& opts);
CommandResult cmd_mul(const CatSpecDocument& doc, const std::string& left, const std::string& right,
                      const CliOptions& opts);
CommandResult cmd_mobius(const CatSpecDocument& doc, const CliOptions& opts);
CommandResult cmd_state_check(const CatSpecDocument& doc, const CliOptions& opts);
CommandResult cmd_gns(const CatSpecDocument& doc, const CliOptions& opts);
CommandResult cmd_demo(const CliOptions& opts);

/// Dispatches one command; `args` holds the positional arguments after the
/// document (element names for mul). Library errors propagate.
CommandResult run_command(const std::string& command, const CatSpecDocument* doc, const std::vector<std::string>& args,
                          const CliOptions& opts);

/// Full command line. Exit status: 0 success, 1 a check failed, 2 usage or
/// input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catalg
