#pragma once

#include <iosfwd>

namespace ftcbf {

// Entry point of the benchmark tool. Returns the process exit code:
//   0  success
//   1  usage or configuration error
//   2  the requested episode failed (infeasible filter or diverged state)
//      before ever reaching the safe set
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ftcbf
