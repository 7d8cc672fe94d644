#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fock {

// Command-line driver. Exit codes: 0 success (or check true), 1 check false,
// 2 usage or data errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fock
