#pragma once

#include <cstddef>

#include "pnc/formula.hpp"

namespace pnc {

struct constant_error : error {
    using error::error;
};

struct hornnc_stats {
    std::size_t nodes_visited = 0;
};

/// True iff every literal occurrence is negative. Requires a constant-free
/// formula; callers simplify first.
bool is_negative(const formula::ptr& f, hornnc_stats* stats = nullptr);

/// Linear-time Horn-NC recognition: one bottom-up pass computing, per node,
/// the pair (negative?, horn-nc?). A disjunction is Horn-NC when at most one
/// disjunct is non-negative and that disjunct is itself Horn-NC; conjunctions
/// are Horn-NC when all conjuncts are. Requires a constant-free formula.
bool is_horn_nc(const formula::ptr& f, hornnc_stats* stats = nullptr);

/// True iff every item is Horn-NC after constant simplification. Items that
/// collapse to a constant are accepted: top items are vacuous and bottom
/// items are picked up by the solver as immediate contradictions.
bool is_horn_nc_base(const base& s);

} // namespace pnc
