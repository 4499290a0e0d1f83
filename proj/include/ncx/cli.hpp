#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncx {

// Command-line entry point; args excludes the program name. Exit codes:
// 0 success, 1 usage error, 2 range/capacity/io error, 3 internal
// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ncx
