#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnc/rational.hpp"

namespace pnc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class connective : unsigned char { top, bottom, literal, conj, disj };

/// Immutable NC formula tree in negation normal form: negation lives only on
/// literals, conjunction/disjunction nest arbitrarily. Nodes are shared and
/// never mutated, so formulas are safe to alias across threads.
class formula {
public:
    using ptr = std::shared_ptr<const formula>;

    static ptr make_top();
    static ptr make_bottom();
    static ptr make_literal(std::string name, bool negative);
    static ptr make_conj(std::vector<ptr> children);
    static ptr make_disj(std::vector<ptr> children);

    connective kind() const { return kind_; }
    bool is_literal() const { return kind_ == connective::literal; }
    bool is_conj() const { return kind_ == connective::conj; }
    bool is_disj() const { return kind_ == connective::disj; }
    bool is_constant() const { return kind_ == connective::top || kind_ == connective::bottom; }

    /// Empty disjunction, the engine's spelling of a derived contradiction.
    bool is_empty_disj() const { return kind_ == connective::disj && children_.empty(); }

    const std::string& name() const { return name_; }
    bool negative() const { return negative_; }
    const std::vector<ptr>& children() const { return children_; }

    /// Total node count, connectives and atoms alike.
    std::size_t node_count() const { return node_count_; }
    std::size_t hash() const { return hash_; }

private:
    formula(connective kind, std::string name, bool negative, std::vector<ptr> children);

    connective kind_;
    bool negative_;
    std::string name_;
    std::vector<ptr> children_;
    std::size_t node_count_;
    std::size_t hash_;
};

bool equal(const formula::ptr& a, const formula::ptr& b);

/// Child-index path from the root; identifies one occurrence in the tree.
struct position {
    std::vector<int> path;

    bool operator==(const position& o) const { return path == o.path; }
    bool is_prefix_of(const position& o) const;
};

struct invalid_position : error {
    using error::error;
};

formula::ptr node_at(const formula::ptr& root, const position& pos);

/// Returns a new tree with the node at `pos` replaced by `replacement`.
formula::ptr replace_at(const formula::ptr& root, const position& pos, const formula::ptr& replacement);

std::size_t size(const formula::ptr& f);
std::string render(const formula::ptr& f);

/// De Morgan push-down; the result is NNF and evaluates to the complement.
formula::ptr negate_nnf(const formula::ptr& f);

/// Constant elimination: removes every top/bottom unless the whole formula
/// collapses to one of them. A connective left with a single child after
/// constant removal is unwrapped.
formula::ptr simplify_constants(const formula::ptr& f);

/// All positions holding exactly this literal, in document order.
std::vector<position> locate_literal(const formula::ptr& f, const std::string& name, bool negative);

struct weighted_formula {
    formula::ptr f;
    weight w;
};

struct base {
    std::vector<weighted_formula> items;
};

} // namespace pnc
