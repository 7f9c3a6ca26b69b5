#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmtype::cli {

enum ExitCode : int { kOk = 0, kConsistency = 1, kInputError = 2 };

// Runs one `cmtype` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmtype::cli
