#pragma once

#include <iosfwd>

namespace hgatsp {

/// Entry point for the `hgatsp` tool: subcommands solve, compare, validate, generate.
/// Data goes to `out`, diagnostics to `err`. Returns the process exit status.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hgatsp
