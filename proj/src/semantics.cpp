#include "pnc/semantics.hpp"

#include <functional>

namespace pnc {

namespace {

void collect_props(const formula::ptr& f, std::set<std::string>& out) {
    if (f->is_literal()) {
        out.insert(f->name());
        return;
    }
    for (const auto& c : f->children())
        collect_props(c, out);
}

/// Runs fn over every interpretation of the given propositions; stops early
/// when fn returns false.
void for_each_interpretation(const std::set<std::string>& props,
                             const std::function<bool(const interpretation&)>& fn) {
    std::vector<std::string> names(props.begin(), props.end());
    std::size_t n = names.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        interpretation w;
        for (std::size_t i = 0; i < n; ++i)
            w.set(names[i], (mask >> i) & 1);
        if (!fn(w))
            return;
    }
}

void check_budget(std::size_t props, std::size_t budget) {
    if (props > budget)
        throw budget_error("proposition budget exceeded: " + std::to_string(props) + " > " +
                           std::to_string(budget));
}

} // namespace

std::set<std::string> propositions(const formula::ptr& f) {
    std::set<std::string> out;
    collect_props(f, out);
    return out;
}

std::set<std::string> propositions(const base& b) {
    std::set<std::string> out;
    for (const auto& item : b.items)
        collect_props(item.f, out);
    return out;
}

bool evaluate(const interpretation& w, const formula::ptr& f) {
    switch (f->kind()) {
    case connective::top:
        return true;
    case connective::bottom:
        return false;
    case connective::literal:
        return w.get(f->name()) != f->negative();
    case connective::conj:
        for (const auto& c : f->children())
            if (!evaluate(w, c))
                return false;
        return true;
    case connective::disj:
        for (const auto& c : f->children())
            if (evaluate(w, c))
                return true;
        return false;
    }
    return false;
}

bool is_consistent_oracle(const formula::ptr& f, std::size_t budget) {
    std::set<std::string> props = propositions(f);
    check_budget(props.size(), budget);
    bool found = false;
    for_each_interpretation(props, [&](const interpretation& w) {
        if (evaluate(w, f)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

rational pi_sigma(const interpretation& w, const base& s) {
    bool all_satisfied = true;
    rational value(1, 1);
    for (const auto& item : s.items) {
        if (!evaluate(w, item.f)) {
            rational complement = rational(1, 1) - item.w.value();
            if (all_satisfied || complement < value)
                value = complement;
            all_satisfied = false;
        }
    }
    return all_satisfied ? rational(1, 1) : value;
}

rational inc_oracle(const base& s, std::size_t budget) {
    std::set<std::string> props = propositions(s);
    check_budget(props.size(), budget);
    bool first = true;
    rational best(0, 1);
    for_each_interpretation(props, [&](const interpretation& w) {
        rational pi = pi_sigma(w, s);
        if (first || best < pi) {
            best = pi;
            first = false;
        }
        // pi == 1 cannot be beaten; the base is consistent.
        return !(best == rational(1, 1));
    });
    return rational(1, 1) - best;
}

rational necessity_oracle(const base& s, const formula::ptr& f, std::size_t budget) {
    base augmented = s;
    augmented.items.push_back(weighted_formula{negate_nnf(f), weight::one()});
    return inc_oracle(augmented, budget);
}

clausal_formula cl_transform(const formula::ptr& f, std::size_t max_clauses) {
    std::function<std::vector<clause>(const formula::ptr&)> go =
        [&](const formula::ptr& node) -> std::vector<clause> {
        switch (node->kind()) {
        case connective::literal:
            return {clause{clausal_literal{node->name(), node->negative()}}};
        case connective::conj: {
            std::vector<clause> out;
            for (const auto& c : node->children()) {
                std::vector<clause> part = go(c);
                if (out.size() + part.size() > max_clauses)
                    throw budget_error("cl transform exceeded the clause budget");
                out.insert(out.end(), part.begin(), part.end());
            }
            return out;
        }
        case connective::disj: {
            // Cross product of the children's clause sets, left to right.
            std::vector<clause> acc{clause{}};
            for (const auto& c : node->children()) {
                std::vector<clause> part = go(c);
                if (acc.size() * part.size() > max_clauses)
                    throw budget_error("cl transform exceeded the clause budget");
                std::vector<clause> next;
                next.reserve(acc.size() * part.size());
                for (const auto& left : acc) {
                    for (const auto& right : part) {
                        clause merged = left;
                        merged.insert(merged.end(), right.begin(), right.end());
                        next.push_back(std::move(merged));
                    }
                }
                acc = std::move(next);
            }
            return acc;
        }
        default:
            throw error("cl transform requires a constant-free formula");
        }
    };
    clausal_formula out;
    out.clauses = go(f);
    return out;
}

bool is_horn_clausal(const clausal_formula& c) {
    for (const auto& cl : c.clauses) {
        int positive = 0;
        for (const auto& lit : cl)
            if (!lit.negative && ++positive > 1)
                return false;
    }
    return true;
}

bool evaluate_clausal(const interpretation& w, const clausal_formula& c) {
    for (const auto& cl : c.clauses) {
        bool sat = false;
        for (const auto& lit : cl) {
            if (w.get(lit.name) != lit.negative) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

} // namespace pnc
