#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtv {

/// Entry point for the `rtv` tool. Subcommands: validate, serve, export.
/// Exit codes: 0 success, 1 validation/runtime failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rtv
