#pragma once

#include <string>
#include <vector>

namespace mpp {

struct CliResult {
  int exitCode = 0;   // 0 ok, 1 domain error, 2 usage error
  std::string out;    // report (JSON by default)
  std::string err;    // diagnostics
};

/// Full command dispatcher; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace mpp
