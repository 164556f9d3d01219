#pragma once

namespace cogol {

/// Entry point for the `cogol` command-line tool (train, predict, tune,
/// benchmark, compare, synth). Returns the process exit code:
/// 0 success, 1 internal failure, 2 usage or input error.
int run_cli(int argc, const char* const* argv);

}  // namespace cogol
