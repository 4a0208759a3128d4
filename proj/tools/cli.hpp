#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace levelcover::cli {

/// Runs one invocation (arguments without the program name). Returns the exit status:
/// 0 on success, 1 on usage or domain errors, 2 on I/O or format errors. Results go to
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelcover::cli
