#pragma once

namespace cotsep {

/// Entry point behind the cotsep binary; also callable in-process from
/// tests. Exit codes: 0 success, 1 runtime failure (fixture mismatch, run
/// error), 2 bad flags.
int run_cli(int argc, const char* const* argv);

}  // namespace cotsep
