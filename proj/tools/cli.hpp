#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperring {

// Exit codes: 0 success, 1 counterexample or failed --assert, 2 bad input.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace hyperring
