#pragma once

// The command-line surface: bracket evaluation, word normalization, and the
// verification suites, exposed as a function so tests can drive it
// in-process. Exit codes: 0 success, 1 a verified identity failed, 2 usage
// or input parse errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace orbigold::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbigold::cli
