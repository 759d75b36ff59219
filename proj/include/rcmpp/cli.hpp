#pragma once

#include <iosfwd>

namespace rcmpp {

/// Entry point behind the `rcmpp` executable: `reorder`, `bench` and
/// `solve-bench` subcommands. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcmpp
