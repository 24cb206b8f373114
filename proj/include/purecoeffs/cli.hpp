#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace purecoeffs::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // bound violated, NotInCone, DISAGREE, failed identity
inline constexpr int kInputError = 2;

/// Runs one invocation. args excludes the program name. Diagram input is
/// read from the named file, or from `in` when the path is "-" or omitted.
/// The default output format comes from PURECOEFFS_FORMAT (json|table) and
/// is overridden by --format.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace purecoeffs::cli
