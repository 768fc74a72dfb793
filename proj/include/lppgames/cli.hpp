#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpp {

/// Command-line front end. Returns the process exit code:
/// 0 success, 2 parse/validation failures, 3 refusals (partition cap,
/// preconditions, generation budget), 1 anything unexpected.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpp
