#pragma once

#include <string>
#include <vector>

namespace polyreg::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command; args excludes the program name. Exit codes: 0 ok, 1 a suite or
/// internal check failed, 2 usage or input error.
Result run(const std::vector<std::string>& args);

}  // namespace polyreg::cli
