#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mckay {

// Runs one CLI invocation (args exclude the program name) writing to the
// given streams. Exit status: 0 success, 1 verification failure, 2 usage or
// parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay
