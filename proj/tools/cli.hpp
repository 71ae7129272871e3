#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spring::cli {

/// Entry point for the `spring` binary. `args` excludes the program name.
/// Returns the process exit code.
int spring_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Entry point for the standalone `numdiff` binary:
///   numdiff [-a ABS] [-r REL] REFERENCE CANDIDATE
/// Exit 0 when equal, 1 when different, 2 on usage or I/O error.
int numdiff_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spring::cli
