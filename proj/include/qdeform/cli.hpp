#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdeform {

// Runs the command-line driver. Exit codes: 0 success, 1 computation error,
// 2 usage/parse error, 3 theorem violation in a scan.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdeform
