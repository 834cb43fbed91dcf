#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cordial {

// Runs one CLI invocation; args excludes the program name. Returns the
// process exit status: 0 success / property holds, 1 property fails,
// 2 usage or input error, 3 internal invariant violation.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cordial
