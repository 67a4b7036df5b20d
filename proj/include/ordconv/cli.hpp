#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordconv::cli {

/// Runs one CLI invocation. Exit codes: 0 success / no violations,
/// 1 property violation or failed verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordconv::cli
