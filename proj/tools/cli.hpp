#pragma once

namespace slw {
namespace cli {

// Dispatches the subcommands and prints machine-readable JSON on stdout.
// Exit codes: 0 success, 1 usage, 2 domain error, 3 pole or unsupported
// regime.
int run(int argc, const char* const* argv);

} // namespace cli
} // namespace slw
