#include "pnc/solver.hpp"

#include "pnc/hornnc.hpp"

namespace pnc {

namespace {

void require_horn_nc(const base& s) {
    for (std::size_t i = 0; i < s.items.size(); ++i) {
        formula::ptr f = simplify_constants(s.items[i].f);
        if (f->is_constant())
            continue;
        if (!is_horn_nc(f))
            throw not_horn_nc_error("item " + std::to_string(i) + " is not Horn-NC: " +
                                        render(s.items[i].f),
                                    static_cast<int>(i), s.items[i].f);
    }
}

std::size_t mk_bound(const base& s) {
    std::size_t m = 0;
    std::vector<rational> weights;
    for (const auto& item : s.items) {
        m += size(item.f);
        bool seen = false;
        for (const auto& w : weights)
            if (w == item.w.value())
                seen = true;
        if (!seen)
            weights.push_back(item.w.value());
    }
    return m * weights.size();
}

} // namespace

base alpha_cut(const base& s, const cut_spec& c) {
    base out;
    for (const auto& item : s.items) {
        if (c.strict ? item.w > c.threshold : item.w >= c.threshold)
            out.items.push_back(item);
    }
    return out;
}

solve_result find_inc(const base& s, const engine_options& opt) {
    require_horn_nc(s);
    solve_result result;
    result.inc = rational(0, 1);
    std::size_t limit = mk_bound(s);
    if (limit == 0)
        limit = 1;
    base cur = s;
    for (;;) {
        ++result.recursion_count;
        // The initial round is a plain call; only the re-entries after a cut
        // count against the quadratic bound.
        if (result.recursion_count > limit + 1)
            throw engine_bug("recursion count exceeded the m*k bound (" + std::to_string(limit) +
                             ")");
        saturate_result round = saturate(cur, opt);
        result.rounds.push_back(round.deriv);
        if (!round.deriv.empty_clause_found) {
            result.final_base = std::move(cur);
            return result;
        }
        weight found = *round.deriv.empty_weight;
        result.inc = found.value();
        cur = alpha_cut(round.extended, cut_spec{found, true});
    }
}

solve_result entails(const base& s, const formula::ptr& query, const engine_options& opt) {
    base augmented = s;
    augmented.items.push_back(weighted_formula{negate_nnf(query), weight::one()});
    formula::ptr neg = simplify_constants(augmented.items.back().f);
    if (!neg->is_constant() && !is_horn_nc(neg))
        throw not_horn_nc_error("negated query is not Horn-NC: " + render(augmented.items.back().f),
                                -1, augmented.items.back().f);
    return find_inc(augmented, opt);
}

bool is_consistent(const base& s, const engine_options& opt) {
    return find_inc(s, opt).inc.is_zero();
}

} // namespace pnc
