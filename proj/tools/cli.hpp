#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar5::cli {

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit code:
///   0 success, 1 bad input or failed verification, 2 internal tripwire,
///   3 no match, 4 audit inconsistency.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace planar5::cli
