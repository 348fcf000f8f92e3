#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace innerfn::cli {

/// Runs one command. Exit status: 0 success, 1 computation error (a JSON
/// error object is written to `out`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace innerfn::cli
