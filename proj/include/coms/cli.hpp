#pragma once

namespace coms::cli {

// Entry point for the comtool binary. Returns the process exit code:
// 0 success, 1 domain errors, 2 usage or parse errors.
int run(int argc, const char* const* argv);

}  // namespace coms::cli
