#include "pnc/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "pnc/hornnc.hpp"

namespace pnc {

namespace {

position prefix_of(const position& pos, std::size_t len) {
    return position{std::vector<int>(pos.path.begin(), pos.path.begin() + len)};
}

/// First occurrence of the literal in document order, if any.
std::optional<position> first_literal(const formula::ptr& f, const std::string& name, bool negative) {
    std::vector<int> path;
    std::optional<position> found;
    std::function<bool(const formula::ptr&)> walk = [&](const formula::ptr& node) {
        if (node->is_literal()) {
            if (node->negative() == negative && node->name() == name) {
                found = position{path};
                return true;
            }
            return false;
        }
        for (std::size_t i = 0; i < node->children().size(); ++i) {
            path.push_back(static_cast<int>(i));
            bool hit = walk(node->children()[i]);
            path.pop_back();
            if (hit)
                return true;
        }
        return false;
    };
    walk(f);
    return found;
}

/// Top of the maximal conjunctive chain above a node: the prefix length of
/// the highest ancestor reachable from the occurrence through conjunctions
/// only (the occurrence itself when its parent is not a conjunction).
std::size_t conj_chain_top(const formula::ptr& root, const position& occ) {
    std::size_t top = occ.path.size();
    while (top > 0) {
        formula::ptr ancestor = node_at(root, prefix_of(occ, top - 1));
        if (!ancestor->is_conj())
            break;
        --top;
    }
    return top;
}

} // namespace

std::optional<cd_split> extract_cd(const formula::ptr& pi, const position& occ) {
    formula::ptr node = node_at(pi, occ);
    if (!node->is_literal())
        throw error("extract_cd: position is not a literal");
    for (std::size_t len = occ.path.size(); len-- > 0;) {
        formula::ptr ancestor = node_at(pi, prefix_of(occ, len));
        if (ancestor->is_conj())
            continue;
        if (ancestor->is_disj()) {
            if (ancestor->children().size() < 2)
                return std::nullopt;
            int c_index = occ.path[len];
            cd_split split;
            split.disj_pos = prefix_of(occ, len);
            split.c_child_index = c_index;
            split.c_formula = ancestor->children()[c_index];
            for (std::size_t i = 0; i < ancestor->children().size(); ++i)
                if (static_cast<int>(i) != c_index)
                    split.d_children.push_back(ancestor->children()[i]);
            return split;
        }
        throw error("extract_cd: malformed tree");
    }
    return std::nullopt; // chain reached the root without crossing a disjunction
}

formula::ptr simplify_structural(const formula::ptr& f) {
    switch (f->kind()) {
    case connective::top:
    case connective::bottom:
    case connective::literal:
        return f;
    case connective::conj: {
        std::vector<formula::ptr> out;
        out.reserve(f->children().size());
        bool changed = false;
        for (const auto& c : f->children()) {
            formula::ptr s = simplify_structural(c);
            if (s->is_empty_disj())
                return formula::make_disj({});
            changed = changed || s.get() != c.get();
            if (s->is_conj()) {
                changed = true;
                out.insert(out.end(), s->children().begin(), s->children().end());
            } else {
                out.push_back(std::move(s));
            }
        }
        if (out.size() == 1)
            return out.front();
        if (!changed)
            return f;
        return formula::make_conj(std::move(out));
    }
    case connective::disj: {
        std::vector<formula::ptr> out;
        out.reserve(f->children().size());
        bool changed = false;
        for (const auto& c : f->children()) {
            formula::ptr s = simplify_structural(c);
            changed = changed || s.get() != c.get();
            if (s->is_disj()) {
                changed = true;
                out.insert(out.end(), s->children().begin(), s->children().end());
            } else {
                out.push_back(std::move(s));
            }
        }
        if (out.size() == 1)
            return out.front();
        if (!changed)
            return f;
        return formula::make_disj(std::move(out));
    }
    }
    return f;
}

weighted_formula ur_sigma_step(const weighted_formula& unit, const weighted_formula& target,
                               const position& occ) {
    if (!unit.f->is_literal())
        throw error("ur_sigma_step: unit premise is not a literal");
    formula::ptr node = node_at(target.f, occ);
    if (!node->is_literal() || node->name() != unit.f->name() ||
        node->negative() == unit.f->negative())
        throw error("ur_sigma_step: occurrence is not complementary to the unit");
    std::optional<cd_split> split = extract_cd(target.f, occ);
    if (!split)
        throw error("ur_sigma_step: pattern not present at the occurrence");
    formula::ptr rewritten =
        replace_at(target.f, split->disj_pos, formula::make_disj(split->d_children));
    return weighted_formula{rewritten, weight::min(unit.w, target.w)};
}

std::vector<weighted_formula> min_d(const weighted_formula& item) {
    if (!item.f->is_conj())
        throw error("min_d: item is not a conjunction");
    std::vector<weighted_formula> out;
    out.reserve(item.f->children().size());
    for (const auto& c : item.f->children())
        out.push_back(weighted_formula{c, item.w});
    return out;
}

weighted_formula max_n(const weighted_formula& a, const weighted_formula& b) {
    if (!equal(a.f, b.f))
        throw error("max_n: formulas differ");
    return weighted_formula{a.f, weight::max(a.w, b.w)};
}

weighted_formula lur_step(const weighted_formula& item, const position& lit_occ,
                          const position& neg_occ) {
    formula::ptr lit = node_at(item.f, lit_occ);
    formula::ptr neg = node_at(item.f, neg_occ);
    if (!lit->is_literal() || !neg->is_literal())
        throw error("lur_step: positions must address literals");
    if (lit->name() != neg->name() || lit->negative() == neg->negative())
        throw error("lur_step: occurrences are not complementary");
    std::optional<cd_split> split = extract_cd(item.f, neg_occ);
    if (!split)
        throw error("lur_step: no enclosing disjunction at the occurrence");
    position scope = prefix_of(lit_occ, conj_chain_top(item.f, lit_occ));
    if (!(scope.is_prefix_of(split->disj_pos) && scope.path.size() < split->disj_pos.path.size()))
        throw error("lur_step: literal is not conjunctively linked to the disjunction");
    formula::ptr rewritten =
        replace_at(item.f, split->disj_pos, formula::make_disj(split->d_children));
    return weighted_formula{rewritten, item.w};
}

std::vector<weighted_formula> hur_step(const weighted_formula& unit,
                                       const std::vector<std::pair<weighted_formula, position>>& targets) {
    if (!unit.f->is_literal())
        throw error("hur_step: unit premise is not a literal");
    std::vector<weighted_formula> out;
    // Group occurrences addressing the same target formula at the same weight.
    std::vector<bool> grouped(targets.size(), false);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (grouped[i])
            continue;
        std::vector<position> occs;
        for (std::size_t j = i; j < targets.size(); ++j) {
            if (grouped[j] || !equal(targets[j].first.f, targets[i].first.f) ||
                targets[j].first.w != targets[i].first.w)
                continue;
            for (const auto& seen : occs)
                if (seen == targets[j].second)
                    throw error("hur_step: occurrences must be pairwise distinct");
            occs.push_back(targets[j].second);
            grouped[j] = true;
        }
        const weighted_formula& target = targets[i].first;
        std::vector<cd_split> splits;
        splits.reserve(occs.size());
        for (const auto& occ : occs) {
            formula::ptr node = node_at(target.f, occ);
            if (!node->is_literal() || node->name() != unit.f->name() ||
                node->negative() == unit.f->negative())
                throw error("hur_step: occurrence is not complementary to the unit");
            std::optional<cd_split> split = extract_cd(target.f, occ);
            if (!split)
                throw error("hur_step: pattern not present at an occurrence");
            splits.push_back(std::move(*split));
        }
        // A C region swallowing another designated occurrence makes the
        // simultaneous rewrite ambiguous.
        for (std::size_t a = 0; a < splits.size(); ++a) {
            position c_pos = splits[a].disj_pos;
            c_pos.path.push_back(splits[a].c_child_index);
            for (std::size_t b = 0; b < occs.size(); ++b) {
                if (a == b)
                    continue;
                if (c_pos.is_prefix_of(occs[b]))
                    throw error("hur_step: overlapping occurrences; apply sequentially instead");
            }
        }
        // Collect, per disjunction, the set of C children to delete.
        std::map<std::vector<int>, std::vector<int>> drops;
        for (const auto& split : splits)
            drops[split.disj_pos.path].push_back(split.c_child_index);
        std::vector<int> path;
        std::function<formula::ptr(const formula::ptr&)> rebuild =
            [&](const formula::ptr& node) -> formula::ptr {
            if (node->is_literal() || node->is_constant())
                return node;
            auto drop_it = drops.find(path);
            std::vector<formula::ptr> children;
            children.reserve(node->children().size());
            for (std::size_t ci = 0; ci < node->children().size(); ++ci) {
                if (drop_it != drops.end() &&
                    std::find(drop_it->second.begin(), drop_it->second.end(),
                              static_cast<int>(ci)) != drop_it->second.end())
                    continue;
                path.push_back(static_cast<int>(ci));
                children.push_back(rebuild(node->children()[ci]));
                path.pop_back();
            }
            return node->is_conj() ? formula::make_conj(std::move(children))
                                   : formula::make_disj(std::move(children));
        };
        out.push_back(weighted_formula{rebuild(target.f), weight::min(unit.w, target.w)});
    }
    return out;
}

const char* rule_name(rule r) {
    switch (r) {
    case rule::ur_sigma:
        return "UR_S";
    case rule::ur_p:
        return "UR_P";
    case rule::simp:
        return "SIMP";
    case rule::min_d:
        return "MIND";
    case rule::max_n:
        return "MAXN";
    case rule::lur:
        return "LUR";
    case rule::hur:
        return "HUR";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

std::string literal_key(const formula::ptr& lit) {
    return lit->negative() ? "-" + lit->name() : lit->name();
}

std::string complement_key(const formula::ptr& lit) {
    return lit->negative() ? lit->name() : "-" + lit->name();
}

class engine {
public:
    engine(const base& input, const engine_options& opt) : input_(input), opt_(opt) {
        std::vector<rational> weights;
        for (const auto& item : input.items) {
            deriv_.subformula_count += size(item.f);
            if (std::find(weights.begin(), weights.end(), item.w.value()) == weights.end())
                weights.push_back(item.w.value());
        }
        deriv_.distinct_weights = weights.size();
        budget_ = deriv_.subformula_count * deriv_.distinct_weights;
        item_dropped_.assign(input.items.size(), false);
    }

    saturate_result run() {
        for (std::size_t i = 0; i < input_.items.size() && !empty_found_; ++i) {
            ingest(i);
            drain();
        }
        saturate_result result;
        for (const entry& e : entries_)
            deriv_.entry_table.push_back(weighted_formula{e.f, e.w});
        result.deriv = std::move(deriv_);
        for (std::size_t i = 0; i < input_.items.size(); ++i)
            if (!item_dropped_[i])
                result.extended.items.push_back(input_.items[i]);
        for (const entry& e : entries_)
            if (e.in_base && !e.dropped)
                result.extended.items.push_back(weighted_formula{e.f, e.w});
        return result;
    }

private:
    struct entry {
        formula::ptr f;
        weight w;
        bool canonical = false;
        bool is_unit = false;
        bool target = false;
        bool retired = false; // superseded as a resolution target
        bool dropped = false; // MaxN-dominated
        bool in_base = false; // deduced formula surviving into the extended base
        int source_item = -1; // index into input items, when this entry mirrors one
    };

    struct task {
        bool is_unit;
        int id;
    };

    int add_entry(formula::ptr f, weight w, bool canonical) {
        entries_.push_back(entry{std::move(f), w, canonical});
        return static_cast<int>(entries_.size()) - 1;
    }

    int add_step(rule r, std::vector<int> premises, formula::ptr conclusion, weight w,
                 bool counts_as_inference) {
        int concl = add_entry(conclusion, w, false);
        deriv_.steps.push_back(derivation_step{static_cast<int>(deriv_.steps.size()) + 1, r,
                                               std::move(premises), concl, conclusion, w});
        if (counts_as_inference) {
            ++deriv_.inference_count;
            if (deriv_.inference_count > budget_)
                throw engine_bug("inference count exceeded the m*k bound (" +
                                 std::to_string(budget_) + "); engine invariant violated");
        }
        return concl;
    }

    void found_empty(const weight& w) {
        empty_found_ = true;
        deriv_.empty_clause_found = true;
        deriv_.empty_weight = w;
    }

    /// MaxN against existing canonical material. Returns false when the new
    /// entry is dominated (and marks it dropped); otherwise registers it.
    bool keep_under_max_n(int id) {
        formula::ptr f = entries_[id].f;
        weight w = entries_[id].w;
        auto range = canonical_.equal_range(f->hash());
        for (auto it = range.first; it != range.second; ++it) {
            int other_id = it->second;
            if (entries_[other_id].dropped || !equal(entries_[other_id].f, f))
                continue;
            if (entries_[other_id].w >= w) {
                add_step(rule::max_n, {id, other_id}, entries_[other_id].f, entries_[other_id].w,
                         false);
                entries_[id].dropped = true;
                entries_[id].retired = true;
                return false;
            }
            add_step(rule::max_n, {id, other_id}, f, w, false);
            entries_[other_id].dropped = true;
            entries_[other_id].retired = true;
            if (entries_[other_id].is_unit) {
                auto uit = units_.find(literal_key(entries_[other_id].f));
                if (uit != units_.end() && uit->second == other_id)
                    units_.erase(uit);
            }
            if (entries_[other_id].source_item >= 0)
                item_dropped_[entries_[other_id].source_item] = true;
            canonical_.erase(it);
            break;
        }
        canonical_.emplace(f->hash(), id);
        return true;
    }

    void register_unit(int id) {
        entries_[id].is_unit = true;
        formula::ptr f = entries_[id].f;
        weight w = entries_[id].w;
        auto comp = units_.find(complement_key(f));
        if (comp != units_.end() && !entries_[comp->second].dropped) {
            weight empty_w = weight::min(w, entries_[comp->second].w);
            add_step(rule::ur_sigma, {id, comp->second}, formula::make_disj({}), empty_w, true);
            found_empty(empty_w);
            return;
        }
        units_[literal_key(f)] = id;
        unit_order_.push_back(id);
        stack_.push_back(task{true, id});
    }

    /// Routes a fresh canonical entry: units register (complementary units
    /// resolve to the empty clause on the spot), deduced conjunctions are
    /// decomposed by MinD, everything else becomes a resolution target.
    void classify(int id) {
        formula::ptr f = entries_[id].f;
        weight w = entries_[id].w;
        if (f->is_literal()) {
            register_unit(id);
            return;
        }
        if (f->is_conj()) {
            entries_[id].retired = true;
            for (const auto& piece : f->children()) {
                int pid = add_step(rule::min_d, {id}, piece, w, true);
                entries_[pid].canonical = true;
                entries_[pid].in_base = true;
                if (!keep_under_max_n(pid))
                    continue;
                classify(pid);
                if (empty_found_)
                    return;
            }
            return;
        }
        entries_[id].target = true;
        stack_.push_back(task{false, id});
    }

    /// Ingestion: constant simplification, structural canonicalization, then
    /// per-item UR_P saturation. Bottom-equivalent items surface the empty
    /// clause immediately.
    void ingest(std::size_t index) {
        const weighted_formula& item = input_.items[index];
        int id = add_entry(item.f, item.w, false);
        entries_[id].source_item = static_cast<int>(index);

        formula::ptr f = simplify_constants(item.f);
        if (f->kind() == connective::top) {
            entries_[id].retired = true; // vacuous
            return;
        }
        if (f->kind() == connective::bottom)
            f = formula::make_disj({});
        f = simplify_structural(f);

        int cid = id;
        if (!equal(f, item.f)) {
            cid = add_step(rule::simp, {id}, f, item.w, false);
            entries_[cid].source_item = static_cast<int>(index);
            entries_[id].retired = true;
        }
        entries_[cid].canonical = true;
        if (f->is_empty_disj()) {
            found_empty(item.w);
            return;
        }
        cid = saturate_within(cid);
        if (cid < 0 || empty_found_)
            return;
        if (!keep_under_max_n(cid))
            return;
        classify(cid);
    }

    /// UR_P saturation inside one formula: root-level literal conjuncts
    /// resolve complementary occurrences, a directly complementary pair of
    /// conjuncts collapses to the empty disjunction. With LUR enabled the
    /// search extends to every conjunctive scope. Returns the residual entry
    /// id, or -1 when the chain folded into an existing entry or ended in
    /// the empty clause.
    int saturate_within(int id) {
        for (;;) {
            formula::ptr f = entries_[id].f;
            weight w = entries_[id].w;
            if (f->is_empty_disj()) {
                found_empty(w);
                return -1;
            }
            if (!f->is_conj() && !opt_.use_lur)
                return id;
            std::optional<std::pair<position, std::optional<cd_split>>> move = find_urp_move(f);
            if (!move)
                return id;
            rule r = rule::ur_p;
            formula::ptr raw;
            if (move->second) {
                const cd_split& split = *move->second;
                if (opt_.use_lur && conj_chain_top(f, move->first) != 0)
                    r = rule::lur;
                raw = replace_at(f, split.disj_pos, formula::make_disj(split.d_children));
            } else {
                raw = formula::make_disj({}); // complementary pair of conjuncts
            }
            int raw_id = add_step(r, {id}, raw, w, true);
            formula::ptr canon = simplify_structural(raw);
            int next = raw_id;
            if (!equal(canon, raw))
                next = add_step(rule::simp, {raw_id}, canon, w, false);
            entries_[next].canonical = true;
            entries_[next].source_item = entries_[id].source_item;
            entries_[id].retired = true;
            if (canon->is_empty_disj()) {
                found_empty(w);
                return -1;
            }
            id = next;
        }
    }

    /// Finds the next intra-formula resolution move: a complementary pair of
    /// top-level conjuncts (returned without a split) or a resolvable
    /// occurrence for some unit conjunct. With LUR, any conjunctively-linked
    /// literal counts as a unit for its own scope.
    std::optional<std::pair<position, std::optional<cd_split>>> find_urp_move(const formula::ptr& f) {
        std::vector<std::pair<position, formula::ptr>> anchors;
        if (f->is_conj()) {
            for (std::size_t i = 0; i < f->children().size(); ++i)
                if (f->children()[i]->is_literal())
                    anchors.emplace_back(position{{static_cast<int>(i)}}, f->children()[i]);
        }
        if (opt_.use_lur) {
            std::vector<int> path;
            std::function<void(const formula::ptr&)> walk = [&](const formula::ptr& node) {
                if (node->is_literal()) {
                    if (!path.empty() || !f->is_conj())
                        anchors.emplace_back(position{path}, node);
                    return;
                }
                for (std::size_t i = 0; i < node->children().size(); ++i) {
                    path.push_back(static_cast<int>(i));
                    walk(node->children()[i]);
                    path.pop_back();
                }
            };
            // Root-level anchors stay in front so plain UR_P moves keep
            // priority over local ones.
            std::size_t root_anchors = anchors.size();
            walk(f);
            for (std::size_t i = root_anchors; i < anchors.size();) {
                bool duplicate = false;
                for (std::size_t j = 0; j < root_anchors; ++j)
                    if (anchors[j].first == anchors[i].first)
                        duplicate = true;
                if (duplicate)
                    anchors.erase(anchors.begin() + static_cast<long>(i));
                else
                    ++i;
            }
        }
        for (const auto& [lit_pos, lit] : anchors) {
            std::vector<position> occs = locate_literal(f, lit->name(), !lit->negative());
            position scope = prefix_of(lit_pos, conj_chain_top(f, lit_pos));
            for (const auto& occ : occs) {
                std::optional<cd_split> split = extract_cd(f, occ);
                if (!split) {
                    // Complementary occurrence whose chain reaches the root:
                    // with the anchor at root level the conjunction is a
                    // direct contradiction.
                    if (scope.path.empty())
                        return std::make_pair(occ, std::optional<cd_split>{});
                    continue;
                }
                if (scope.is_prefix_of(split->disj_pos) &&
                    scope.path.size() < split->disj_pos.path.size())
                    return std::make_pair(occ, std::move(split));
            }
        }
        return std::nullopt;
    }

    void drain() {
        while (!stack_.empty() && !empty_found_) {
            task t = stack_.back();
            stack_.pop_back();
            if (t.is_unit) {
                const entry& u = entries_[t.id];
                if (u.dropped || !u.is_unit)
                    continue;
                for (std::size_t li = 0; li < entries_.size() && !empty_found_; ++li) {
                    if (static_cast<int>(li) == t.id)
                        continue;
                    const entry& cand = entries_[li];
                    if (!cand.target || cand.retired || cand.dropped)
                        continue;
                    resolve_chain(t.id, static_cast<int>(li));
                }
            } else {
                if (entries_[t.id].retired || entries_[t.id].dropped || !entries_[t.id].target)
                    continue;
                int head = t.id;
                // Newest units first; fresh units created along the way get
                // their own turn via their unit task.
                for (std::size_t ui = unit_order_.size(); ui-- > 0 && !empty_found_;) {
                    int u = unit_order_[ui];
                    if (entries_[u].dropped)
                        continue;
                    head = resolve_chain(u, head);
                    if (head < 0)
                        break;
                }
            }
        }
    }

    /// Resolves one unit against the evolving form of one target until no
    /// complementary occurrence remains. Returns the final head id, or -1
    /// when the chain ended (unit, MinD decomposition, domination, empty).
    int resolve_chain(int unit_id, int target_id) {
        int head = target_id;
        for (;;) {
            if (empty_found_)
                return -1;
            if (entries_[head].retired || entries_[head].dropped || !entries_[head].target)
                return -1;
            std::uint64_t pair_key =
                (static_cast<std::uint64_t>(unit_id) << 32) | static_cast<std::uint32_t>(head);
            if (resolved_.count(pair_key))
                return head;
            formula::ptr unit_f = entries_[unit_id].f;
            formula::ptr target_f = entries_[head].f;
            weight w = weight::min(entries_[unit_id].w, entries_[head].w);
            std::vector<position> occs;
            if (opt_.use_hur) {
                occs = locate_literal(target_f, unit_f->name(), !unit_f->negative());
            } else {
                std::optional<position> first =
                    first_literal(target_f, unit_f->name(), !unit_f->negative());
                if (first)
                    occs.push_back(*first);
            }
            if (occs.empty()) {
                resolved_.insert(pair_key);
                return head;
            }
            formula::ptr raw;
            rule r = rule::ur_sigma;
            std::optional<cd_split> first_split = extract_cd(target_f, occs.front());
            if (!first_split) {
                // The whole target is conjunctively linked to the
                // occurrence; resolving yields the empty clause outright.
                raw = formula::make_disj({});
            } else if (opt_.use_hur && occs.size() > 1) {
                raw = hur_rewrite(target_f, occs, r);
                if (!raw) { // overlap; fall back to the first occurrence
                    raw = replace_at(target_f, first_split->disj_pos,
                                     formula::make_disj(first_split->d_children));
                    r = rule::ur_sigma;
                }
            } else {
                raw = replace_at(target_f, first_split->disj_pos,
                                 formula::make_disj(first_split->d_children));
            }
            int raw_id = add_step(r, {unit_id, head}, raw, w, true);
            formula::ptr canon = simplify_structural(raw);
            int next = raw_id;
            if (!equal(canon, raw))
                next = add_step(rule::simp, {raw_id}, canon, w, false);
            entries_[next].canonical = true;
            if (canon->is_empty_disj()) {
                found_empty(w);
                return -1;
            }
            entries_[next].in_base = true;
            if (!keep_under_max_n(next)) {
                resolved_.insert(pair_key);
                return head;
            }
            entries_[head].retired = true;
            classify(next);
            if (empty_found_)
                return -1;
            if (!entries_[next].target)
                return -1; // became a unit or was decomposed
            head = next;
        }
    }

    /// Simultaneous rewrite for HUR; returns null when C regions overlap.
    formula::ptr hur_rewrite(const formula::ptr& f, const std::vector<position>& occs, rule& r) {
        std::vector<cd_split> splits;
        splits.reserve(occs.size());
        for (const auto& occ : occs) {
            std::optional<cd_split> split = extract_cd(f, occ);
            if (!split)
                return nullptr;
            splits.push_back(std::move(*split));
        }
        for (std::size_t a = 0; a < splits.size(); ++a) {
            position c_pos = splits[a].disj_pos;
            c_pos.path.push_back(splits[a].c_child_index);
            for (std::size_t b = 0; b < occs.size(); ++b) {
                if (a == b)
                    continue;
                if (c_pos.is_prefix_of(occs[b]))
                    return nullptr;
            }
        }
        std::map<std::vector<int>, std::vector<int>> drops;
        for (const auto& split : splits)
            drops[split.disj_pos.path].push_back(split.c_child_index);
        std::vector<int> path;
        std::function<formula::ptr(const formula::ptr&)> rebuild =
            [&](const formula::ptr& node) -> formula::ptr {
            if (node->is_literal() || node->is_constant())
                return node;
            auto drop_it = drops.find(path);
            std::vector<formula::ptr> children;
            children.reserve(node->children().size());
            for (std::size_t ci = 0; ci < node->children().size(); ++ci) {
                if (drop_it != drops.end() &&
                    std::find(drop_it->second.begin(), drop_it->second.end(),
                              static_cast<int>(ci)) != drop_it->second.end())
                    continue;
                path.push_back(static_cast<int>(ci));
                children.push_back(rebuild(node->children()[ci]));
                path.pop_back();
            }
            return node->is_conj() ? formula::make_conj(std::move(children))
                                   : formula::make_disj(std::move(children));
        };
        r = rule::hur;
        return rebuild(f);
    }

    const base& input_;
    engine_options opt_;
    derivation deriv_;
    std::size_t budget_ = 0;
    std::vector<entry> entries_;
    std::vector<bool> item_dropped_;
    std::unordered_map<std::string, int> units_;
    std::vector<int> unit_order_;
    std::unordered_multimap<std::size_t, int> canonical_;
    std::unordered_set<std::uint64_t> resolved_;
    std::vector<task> stack_;
    bool empty_found_ = false;
};

} // namespace

urp_outcome ur_p_saturate(const weighted_formula& item) {
    formula::ptr f = simplify_constants(item.f);
    if (f->kind() == connective::top)
        return urp_outcome{false, formula::make_top()};
    if (f->kind() == connective::bottom)
        return urp_outcome{true, nullptr};
    if (!is_horn_nc(f))
        throw error("ur_p_saturate: input is not Horn-NC; completeness is void");
    base single;
    single.items.push_back(weighted_formula{f, item.w});
    engine e(single, engine_options{});
    saturate_result result = e.run();
    if (result.deriv.empty_clause_found)
        return urp_outcome{true, nullptr};
    // The residual is the last canonical form the item reached.
    formula::ptr residual = simplify_structural(f);
    for (const auto& step : result.deriv.steps)
        if (step.r == rule::ur_p || step.r == rule::simp || step.r == rule::lur)
            residual = step.conclusion;
    return urp_outcome{false, residual};
}

saturate_result saturate(const base& b, const engine_options& opt) {
    engine e(b, opt);
    return e.run();
}

} // namespace pnc
