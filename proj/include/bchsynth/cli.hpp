// Command-line surface; the binary in tools/ is a thin wrapper around
// run_cli so tests can drive the full tool in-process.
#pragma once

#include <string>
#include <vector>

namespace bchsynth {

// Exit codes: 0 success (analysis commands additionally require a confident
// winner), 2 analysis finished without a valid candidate, 1 usage or I/O
// failure.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);   // args without program name

}  // namespace bchsynth
