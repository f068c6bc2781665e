#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pnc/formula.hpp"

namespace pnc {

struct budget_error : error {
    using error::error;
};

struct unbound_proposition : error {
    using error::error;
};

/// Total truth assignment over the propositions under consideration.
class interpretation {
public:
    void set(const std::string& name, bool value) { map_[name] = value; }

    bool get(const std::string& name) const {
        auto it = map_.find(name);
        if (it == map_.end())
            throw unbound_proposition("unbound proposition: " + name);
        return it->second;
    }

private:
    std::unordered_map<std::string, bool> map_;
};

std::set<std::string> propositions(const formula::ptr& f);
std::set<std::string> propositions(const base& b);

/// min over conjuncts, max over disjuncts, w(bottom)=w((or))=0, w(top)=1.
bool evaluate(const interpretation& w, const formula::ptr& f);

inline constexpr std::size_t default_proposition_budget = 20;

/// Exhaustive model search. Deliberately naive; refuses large signatures.
bool is_consistent_oracle(const formula::ptr& f, std::size_t budget = default_proposition_budget);

/// Least specific possibility distribution compatible with the base,
/// evaluated at one interpretation.
rational pi_sigma(const interpretation& w, const base& s);

/// Inc by brute force: 1 - max over all interpretations of pi_sigma.
rational inc_oracle(const base& s, std::size_t budget = default_proposition_budget);

/// Maximal alpha with the base entailing the query at necessity alpha,
/// computed as the inconsistency degree of the base plus the negated query.
rational necessity_oracle(const base& s, const formula::ptr& f,
                          std::size_t budget = default_proposition_budget);

struct clausal_literal {
    std::string name;
    bool negative;

    bool operator==(const clausal_literal& o) const {
        return negative == o.negative && name == o.name;
    }
};

using clause = std::vector<clausal_literal>;

/// Flat conjunction of disjunctions of literals.
struct clausal_formula {
    std::vector<clause> clauses;
};

inline constexpr std::size_t default_clause_budget = 100000;

/// Distributes disjunctions over conjunctions, leftmost-innermost, until the
/// formula is clausal. Exponential in the worst case, hence the budget.
/// The input must be constant-free.
clausal_formula cl_transform(const formula::ptr& f, std::size_t max_clauses = default_clause_budget);

bool is_horn_clausal(const clausal_formula& c);

bool evaluate_clausal(const interpretation& w, const clausal_formula& c);

} // namespace pnc
