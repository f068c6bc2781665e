#pragma once

#include <string>

#include "pnc/solver.hpp"

namespace pnc {

/// Line-oriented derivation trace:
///   step N: RULE [premises] -> conclusion : weight
std::string render_trace(const derivation& d, int round_no);

/// All rounds of a solve, with the cut thresholds between them.
std::string render_trace(const solve_result& r);

} // namespace pnc
