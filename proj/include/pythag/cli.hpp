#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pythag::cli {

/// Runs one command line (without the program name). Returns 0 on success, 1
/// on a domain error and 2 on a usage error. The default output format is
/// taken from PYTHAG_FORMAT ("table" or "json") unless --format is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pythag::cli
