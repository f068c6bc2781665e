#pragma once

#include <vector>

#include "pnc/calculus.hpp"

namespace pnc {

struct cut_spec {
    weight threshold;
    bool strict;
};

/// Items at weight >= threshold (> when strict), weights retained.
base alpha_cut(const base& s, const cut_spec& c);

struct not_horn_nc_error : error {
    not_horn_nc_error(std::string msg, int index, formula::ptr offending)
        : error(std::move(msg)), item_index(index), offending(std::move(offending)) {}

    int item_index; // -1 when the offending formula is a query negation
    formula::ptr offending;
};

struct solve_result {
    rational inc;
    std::vector<derivation> rounds;
    base final_base; // what the last saturation round was given
    std::size_t recursion_count = 0;
};

/// Computes Inc by repeated saturation: every empty clause at weight w
/// raises the accumulator and restarts from the strict w-cut of the
/// extended base; the first consistent round returns the accumulator.
/// Requires a Horn-NC base. The recursion count is asserted against the
/// m*k bound of the input.
solve_result find_inc(const base& s, const engine_options& opt = {});

/// Maximal alpha with the base entailing the query at necessity alpha:
/// find_inc of the base extended with the negated query at weight one.
/// Refused when the extension is not Horn-NC.
solve_result entails(const base& s, const formula::ptr& query, const engine_options& opt = {});

bool is_consistent(const base& s, const engine_options& opt = {});

} // namespace pnc
