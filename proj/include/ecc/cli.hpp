#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecc::cli {

/// Entry point behind the `ecc` binary. Exit codes: 0 success (or yes for
/// decide), 1 decide answered no, 2 usage error, 3 input error, 4 guard
/// violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace ecc::cli
