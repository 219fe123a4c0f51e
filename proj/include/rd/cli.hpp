#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rd {

// Exit codes: 0 pass, 1 predicate fail, 2 malformed input, 3 field
// obstruction (no roots), 4 candidate-space guard exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rd
