#pragma once

namespace nlm {

/// Entry point of the nlmx command-line tool. Exit codes: 0 success,
/// 1 invalid configuration, 2 solver non-convergence.
int cli_main(int argc, const char* const* argv);

}  // namespace nlm
