#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbonlab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kFormat = 3,
  kResource = 4,
};

// args excludes the program name. Errors go to err as one-line JSON
// {"error": ..., "detail": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbonlab::cli
