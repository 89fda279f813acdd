#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folcalc::cli {

/// Runs one folcalc invocation. `args` excludes the program name. Returns the
/// process exit status: 0 success, 1 domain error, 2 validation/usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace folcalc::cli
