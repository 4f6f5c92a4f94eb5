#pragma once
// Command-line front end. `dispatch` is the whole CLI: it parses argv-style
// arguments, writes results to `out` and diagnostics to `err`, and returns
// the process exit status (0 success, 1 domain error, 2 usage error).

#include <iosfwd>
#include <string>
#include <vector>

namespace ail2::cli {

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ail2::cli
