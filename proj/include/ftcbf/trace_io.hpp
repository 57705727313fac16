#pragma once

#include <string>

#include "ftcbf/simulator.hpp"

namespace ftcbf {

// Column layout of trace CSV files (one row per simulation step):
//   t,x1,x2,x3,x4,h,hdot,u1,u2,slack
// Values carry enough digits to round-trip doubles exactly.
void write_trace_csv(const EpisodeTrace& trace, const std::string& path);

// Read a trace CSV written by write_trace_csv; only rows are recovered,
// convergence is re-derived from them.
EpisodeTrace read_trace_csv(const std::string& path);

}  // namespace ftcbf
