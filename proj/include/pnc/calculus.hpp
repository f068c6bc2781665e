#pragma once

#include <optional>
#include <vector>

#include "pnc/formula.hpp"

namespace pnc {

/// Occurrence split for unit resolution: inside some disjunction of the
/// target, `c_formula` is the maximal conjunctively-linked sub-formula
/// containing the designated literal occurrence, and `d_children` are the
/// remaining disjuncts.
struct cd_split {
    position disj_pos;
    int c_child_index;
    formula::ptr c_formula;
    std::vector<formula::ptr> d_children;
};

/// Climbs from the occurrence through consecutive conjunction ancestors.
/// Returns the split when the first non-conjunction ancestor is a
/// disjunction with at least one sibling; none when the chain reaches the
/// root without crossing a disjunction or the enclosing disjunction has a
/// single child. Throws on invalid or non-literal positions.
std::optional<cd_split> extract_cd(const formula::ptr& pi, const position& occ);

/// Fixpoint of the four structural rules: drop empty disjunctions from
/// disjunction children, collapse conjunctions containing an empty
/// disjunction, unwrap single-child connectives, splice same-connective
/// nesting. Idempotent and evaluation-preserving.
formula::ptr simplify_structural(const formula::ptr& f);

/// Unit resolution against one occurrence: the enclosing disjunction loses
/// its C part, the weight drops to the minimum. The result is raw; callers
/// simplify structurally.
weighted_formula ur_sigma_step(const weighted_formula& unit, const weighted_formula& target,
                               const position& occ);

struct urp_outcome {
    bool inconsistent;
    formula::ptr residual; // meaningful when consistent
};

/// Saturates a single formula under root-level unit resolution plus the
/// structural rules. Complete for Horn-NC inputs: inconsistent formulas
/// collapse to the empty disjunction, consistent ones reach a fixpoint.
urp_outcome ur_p_saturate(const weighted_formula& item);

/// Conjunct extraction: each conjunct inherits the conjunction's weight.
std::vector<weighted_formula> min_d(const weighted_formula& item);

/// Duplicate elimination: identical formulas keep the maximal weight.
weighted_formula max_n(const weighted_formula& a, const weighted_formula& b);

/// Local unit resolution inside one formula: a literal occurrence whose
/// maximal conjunctive scope contains the split disjunction licenses the
/// same C deletion, weight unchanged. Equivalence-preserving.
weighted_formula lur_step(const weighted_formula& item, const position& lit_occ,
                          const position& neg_occ);

/// Hyper unit resolution: all designated occurrences are rewritten at once;
/// occurrences sharing a target rewrite a single copy of it. Overlapping C
/// regions are rejected; apply sequentially instead.
std::vector<weighted_formula> hur_step(const weighted_formula& unit,
                                       const std::vector<std::pair<weighted_formula, position>>& targets);

// ---------------------------------------------------------------------------
// Saturation engine
// ---------------------------------------------------------------------------

enum class rule : unsigned char { ur_sigma, ur_p, simp, min_d, max_n, lur, hur };

const char* rule_name(rule r);

struct derivation_step {
    int id; // 1-based step number
    rule r;
    std::vector<int> premises; // engine entry ids
    int conclusion_entry;
    formula::ptr conclusion;
    weight w;
};

struct derivation {
    std::vector<derivation_step> steps;
    /// Formula and weight for every entry id used in step premises: input
    /// items first, then each step's conclusion.
    std::vector<weighted_formula> entry_table;
    bool empty_clause_found = false;
    std::optional<weight> empty_weight;
    std::size_t inference_count = 0;
    std::size_t subformula_count = 0;   // m of the input base
    std::size_t distinct_weights = 0;   // k of the input base
};

struct engine_options {
    bool use_lur = false;
    bool use_hur = false;
};

struct saturate_result {
    derivation deriv;
    base extended; // input items plus non-dominated deduced formulas
};

struct engine_bug : error {
    using error::error;
};

/// Deterministic fair saturation: items are ingested in order (constants
/// simplified, structure canonicalized, each item saturated under UR_P),
/// deduced conjunctions are decomposed by MinD, units resolve against
/// targets with newest units tried first, and MaxN keeps one copy of each
/// formula at its maximal weight. Stops at the first root-level empty
/// disjunction or at the fixpoint. Inference count is asserted against the
/// m*k bound of the input.
saturate_result saturate(const base& b, const engine_options& opt = {});

} // namespace pnc
