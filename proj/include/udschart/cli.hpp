#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uds::cli {

/// Runs one CLI invocation. Data goes to `out`, findings and errors to
/// `err`. Exit status: 0 on success, 1 for domain failures (unknown
/// scheme id, lint errors), 2 for usage or catalog parse failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uds::cli
