#ifndef NORMAN_TOOLS_CLI_HPP
#define NORMAN_TOOLS_CLI_HPP

#include <iosfwd>

namespace norman::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace norman::cli

#endif
