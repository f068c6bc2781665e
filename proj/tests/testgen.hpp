#pragma once

// Test-only helpers: deterministic formula/base generators, exhaustive
// enumerators, and a clausal unit-propagation reference solver. Everything
// here is independent of the engine under test.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pnc/calculus.hpp"
#include "pnc/formula.hpp"
#include "pnc/semantics.hpp"

namespace pnc::testgen {

using rng = std::mt19937_64;

inline std::vector<std::string> props(int n) {
    static const char* names[] = {"P", "Q", "R", "S", "T", "U", "V", "W", "X", "Y", "Z"};
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(i < 11 ? names[i] : "A" + std::to_string(i));
    return out;
}

inline formula::ptr random_literal(rng& g, const std::vector<std::string>& ps, bool negative) {
    return formula::make_literal(ps[g() % ps.size()], negative);
}

inline formula::ptr random_negative(rng& g, const std::vector<std::string>& ps, int depth) {
    if (depth == 0 || g() % 3 == 0)
        return random_literal(g, ps, true);
    std::size_t k = 2 + g() % 2;
    std::vector<formula::ptr> children;
    for (std::size_t i = 0; i < k; ++i)
        children.push_back(random_negative(g, ps, depth - 1));
    return g() % 2 ? formula::make_conj(std::move(children))
                   : formula::make_disj(std::move(children));
}

inline formula::ptr random_horn_nc(rng& g, const std::vector<std::string>& ps, int depth) {
    if (depth == 0 || g() % 3 == 0)
        return random_literal(g, ps, g() % 2 == 0);
    std::size_t k = 2 + g() % 2;
    std::vector<formula::ptr> children;
    if (g() % 2) {
        for (std::size_t i = 0; i < k; ++i)
            children.push_back(random_horn_nc(g, ps, depth - 1));
        return formula::make_conj(std::move(children));
    }
    std::size_t horn_slot = g() % k;
    for (std::size_t i = 0; i < k; ++i)
        children.push_back(i == horn_slot ? random_horn_nc(g, ps, depth - 1)
                                          : random_negative(g, ps, depth - 1));
    return formula::make_disj(std::move(children));
}

/// Arbitrary constant-free NNF, not necessarily Horn-NC.
inline formula::ptr random_nc(rng& g, const std::vector<std::string>& ps, int depth) {
    if (depth == 0 || g() % 3 == 0)
        return random_literal(g, ps, g() % 2 == 0);
    std::size_t k = 2 + g() % 2;
    std::vector<formula::ptr> children;
    for (std::size_t i = 0; i < k; ++i)
        children.push_back(random_nc(g, ps, depth - 1));
    return g() % 2 ? formula::make_conj(std::move(children))
                   : formula::make_disj(std::move(children));
}

inline std::vector<weight> weight_grid() {
    std::vector<weight> out;
    for (int i = 1; i <= 10; ++i)
        out.push_back(weight(rational(i, 10)));
    return out;
}

inline base random_horn_nc_base(rng& g, int max_items, int n_props, int depth) {
    std::vector<std::string> ps = props(n_props);
    std::vector<weight> grid = weight_grid();
    base b;
    int items = 1 + static_cast<int>(g() % static_cast<std::size_t>(max_items));
    for (int i = 0; i < items; ++i)
        b.items.push_back(weighted_formula{random_horn_nc(g, ps, static_cast<int>(g() % 3)),
                                           grid[g() % grid.size()]});
    return b;
}

/// All binary-connective formulas over the propositions with at most
/// `levels` connective levels (a literal alone is level zero).
inline std::vector<formula::ptr> enumerate_binary_formulas(const std::vector<std::string>& ps,
                                                           int levels) {
    std::vector<formula::ptr> pool;
    for (const auto& p : ps) {
        pool.push_back(formula::make_literal(p, false));
        pool.push_back(formula::make_literal(p, true));
    }
    std::size_t prev_begin = 0;
    for (int level = 1; level <= levels; ++level) {
        std::size_t end = pool.size();
        std::vector<formula::ptr> added;
        for (std::size_t i = 0; i < end; ++i) {
            for (std::size_t j = 0; j < end; ++j) {
                // Require at least one child from the previous level so each
                // pass adds only new-depth formulas.
                if (i < prev_begin && j < prev_begin && level > 1)
                    continue;
                added.push_back(formula::make_conj({pool[i], pool[j]}));
                added.push_back(formula::make_disj({pool[i], pool[j]}));
            }
        }
        prev_begin = end;
        pool.insert(pool.end(), added.begin(), added.end());
    }
    return pool;
}

// ---------------------------------------------------------------------------
// Clausal unit-propagation reference
// ---------------------------------------------------------------------------

struct ref_clause {
    std::vector<clausal_literal> lits;
    weight w;
};

/// Horn satisfiability by plain unit propagation over literal lists.
inline bool horn_clauses_unsat(std::vector<std::vector<clausal_literal>> clauses) {
    std::vector<clausal_literal> assigned;
    for (;;) {
        bool progress = false;
        for (auto it = clauses.begin(); it != clauses.end();) {
            auto& cl = *it;
            if (cl.empty())
                return true;
            bool satisfied = false;
            for (std::size_t i = 0; i < cl.size();) {
                bool falsified = false;
                for (const auto& a : assigned) {
                    if (a.name == cl[i].name) {
                        if (a.negative == cl[i].negative)
                            satisfied = true;
                        else
                            falsified = true;
                        break;
                    }
                }
                if (satisfied)
                    break;
                if (falsified) {
                    cl.erase(cl.begin() + static_cast<long>(i));
                    progress = true;
                } else {
                    ++i;
                }
            }
            if (satisfied) {
                it = clauses.erase(it);
                progress = true;
                continue;
            }
            if (cl.empty())
                return true;
            if (cl.size() == 1) {
                assigned.push_back(cl.front());
                it = clauses.erase(it);
                progress = true;
                continue;
            }
            ++it;
        }
        if (!progress)
            return false; // fixpoint without an empty clause: satisfiable (Horn)
    }
}

/// Inc of a possibilistic Horn clausal base by cut-and-propagate.
inline rational clausal_inc_reference(const std::vector<ref_clause>& items) {
    std::vector<rational> weights;
    for (const auto& item : items)
        if (std::find(weights.begin(), weights.end(), item.w.value()) == weights.end())
            weights.push_back(item.w.value());
    std::sort(weights.begin(), weights.end(), [](const rational& a, const rational& b) { return b < a; });
    for (const auto& alpha : weights) {
        std::vector<std::vector<clausal_literal>> cut;
        for (const auto& item : items)
            if (alpha <= item.w.value())
                cut.push_back(item.lits);
        if (horn_clauses_unsat(std::move(cut)))
            return alpha;
    }
    return rational(0, 1);
}

/// Random possibilistic Horn clausal base (every clause has at most one
/// positive literal), together with its NC rendering for the engine.
inline std::pair<base, std::vector<ref_clause>> random_horn_clausal_base(rng& g, int max_items,
                                                                         int n_props) {
    std::vector<std::string> ps = props(n_props);
    std::vector<weight> grid = weight_grid();
    base b;
    std::vector<ref_clause> ref;
    int items = 1 + static_cast<int>(g() % static_cast<std::size_t>(max_items));
    for (int i = 0; i < items; ++i) {
        std::size_t len = 1 + g() % 3;
        std::vector<clausal_literal> lits;
        bool used_positive = g() % 2 == 0; // half the clauses get no positive literal
        for (std::size_t j = 0; j < len; ++j) {
            bool negative = used_positive || g() % 2 == 0;
            if (!negative)
                used_positive = true;
            lits.push_back(clausal_literal{ps[g() % ps.size()], negative});
        }
        weight w = grid[g() % grid.size()];
        std::vector<formula::ptr> children;
        for (const auto& lit : lits)
            children.push_back(formula::make_literal(lit.name, lit.negative));
        formula::ptr f = lits.size() == 1 ? children.front()
                                          : formula::make_disj(std::move(children));
        b.items.push_back(weighted_formula{f, w});
        ref.push_back(ref_clause{std::move(lits), w});
    }
    return {std::move(b), std::move(ref)};
}

} // namespace pnc::testgen
