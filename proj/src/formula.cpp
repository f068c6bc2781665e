#include "pnc/formula.hpp"

#include <functional>

namespace pnc {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace

formula::formula(connective kind, std::string name, bool negative, std::vector<ptr> children)
    : kind_(kind),
      negative_(negative),
      name_(std::move(name)),
      children_(std::move(children)),
      node_count_(1) {
    hash_ = static_cast<std::size_t>(kind_) * 0x9e3779b9u;
    switch (kind_) {
    case connective::literal:
        hash_combine(hash_, std::hash<std::string>{}(name_));
        hash_combine(hash_, negative_ ? 0x5bd1e995u : 0x27d4eb2fu);
        break;
    case connective::conj:
    case connective::disj:
        for (const auto& c : children_) {
            node_count_ += c->node_count_;
            hash_combine(hash_, c->hash_);
        }
        break;
    default:
        break;
    }
}

formula::ptr formula::make_top() {
    static const ptr instance(new formula(connective::top, {}, false, {}));
    return instance;
}

formula::ptr formula::make_bottom() {
    static const ptr instance(new formula(connective::bottom, {}, false, {}));
    return instance;
}

formula::ptr formula::make_literal(std::string name, bool negative) {
    return ptr(new formula(connective::literal, std::move(name), negative, {}));
}

formula::ptr formula::make_conj(std::vector<ptr> children) {
    return ptr(new formula(connective::conj, {}, false, std::move(children)));
}

formula::ptr formula::make_disj(std::vector<ptr> children) {
    return ptr(new formula(connective::disj, {}, false, std::move(children)));
}

bool equal(const formula::ptr& a, const formula::ptr& b) {
    if (a.get() == b.get())
        return true;
    if (a->hash() != b->hash() || a->kind() != b->kind())
        return false;
    switch (a->kind()) {
    case connective::top:
    case connective::bottom:
        return true;
    case connective::literal:
        return a->negative() == b->negative() && a->name() == b->name();
    default:
        if (a->children().size() != b->children().size())
            return false;
        for (std::size_t i = 0; i < a->children().size(); ++i)
            if (!equal(a->children()[i], b->children()[i]))
                return false;
        return true;
    }
}

bool position::is_prefix_of(const position& o) const {
    if (path.size() > o.path.size())
        return false;
    for (std::size_t i = 0; i < path.size(); ++i)
        if (path[i] != o.path[i])
            return false;
    return true;
}

formula::ptr node_at(const formula::ptr& root, const position& pos) {
    formula::ptr cur = root;
    for (int idx : pos.path) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children().size())
            throw invalid_position("position does not address a node");
        cur = cur->children()[idx];
    }
    return cur;
}

formula::ptr replace_at(const formula::ptr& root, const position& pos, const formula::ptr& replacement) {
    std::function<formula::ptr(const formula::ptr&, std::size_t)> go =
        [&](const formula::ptr& node, std::size_t depth) -> formula::ptr {
        if (depth == pos.path.size())
            return replacement;
        int idx = pos.path[depth];
        if (idx < 0 || static_cast<std::size_t>(idx) >= node->children().size())
            throw invalid_position("position does not address a node");
        std::vector<formula::ptr> children = node->children();
        children[idx] = go(children[idx], depth + 1);
        return node->is_conj() ? formula::make_conj(std::move(children))
                               : formula::make_disj(std::move(children));
    };
    return go(root, 0);
}

std::size_t size(const formula::ptr& f) {
    return f->node_count();
}

std::string render(const formula::ptr& f) {
    switch (f->kind()) {
    case connective::top:
        return "true";
    case connective::bottom:
        return "false";
    case connective::literal:
        return f->negative() ? "-" + f->name() : f->name();
    case connective::conj:
    case connective::disj: {
        std::string out = f->is_conj() ? "(and" : "(or";
        for (const auto& c : f->children()) {
            out += ' ';
            out += render(c);
        }
        out += ')';
        return out;
    }
    }
    return {};
}

formula::ptr negate_nnf(const formula::ptr& f) {
    switch (f->kind()) {
    case connective::top:
        return formula::make_bottom();
    case connective::bottom:
        return formula::make_top();
    case connective::literal:
        return formula::make_literal(f->name(), !f->negative());
    case connective::conj:
    case connective::disj: {
        std::vector<formula::ptr> children;
        children.reserve(f->children().size());
        for (const auto& c : f->children())
            children.push_back(negate_nnf(c));
        return f->is_conj() ? formula::make_disj(std::move(children))
                            : formula::make_conj(std::move(children));
    }
    }
    return f;
}

formula::ptr simplify_constants(const formula::ptr& f) {
    switch (f->kind()) {
    case connective::top:
    case connective::bottom:
    case connective::literal:
        return f;
    case connective::conj: {
        std::vector<formula::ptr> kept;
        kept.reserve(f->children().size());
        bool changed = false;
        for (const auto& c : f->children()) {
            formula::ptr s = simplify_constants(c);
            changed = changed || s.get() != c.get();
            if (s->kind() == connective::bottom)
                return formula::make_bottom();
            if (s->kind() == connective::top) {
                changed = true;
                continue;
            }
            kept.push_back(std::move(s));
        }
        if (kept.empty())
            return formula::make_top();
        if (kept.size() == 1 && changed)
            return kept.front();
        if (!changed)
            return f;
        return formula::make_conj(std::move(kept));
    }
    case connective::disj: {
        std::vector<formula::ptr> kept;
        kept.reserve(f->children().size());
        bool changed = false;
        for (const auto& c : f->children()) {
            formula::ptr s = simplify_constants(c);
            changed = changed || s.get() != c.get();
            if (s->kind() == connective::top)
                return formula::make_top();
            if (s->kind() == connective::bottom) {
                changed = true;
                continue;
            }
            kept.push_back(std::move(s));
        }
        if (kept.empty())
            return formula::make_bottom();
        if (kept.size() == 1 && changed)
            return kept.front();
        if (!changed)
            return f;
        return formula::make_disj(std::move(kept));
    }
    }
    return f;
}

std::vector<position> locate_literal(const formula::ptr& f, const std::string& name, bool negative) {
    std::vector<position> found;
    std::vector<int> path;
    std::function<void(const formula::ptr&)> walk = [&](const formula::ptr& node) {
        if (node->is_literal()) {
            if (node->negative() == negative && node->name() == name)
                found.push_back(position{path});
            return;
        }
        for (std::size_t i = 0; i < node->children().size(); ++i) {
            path.push_back(static_cast<int>(i));
            walk(node->children()[i]);
            path.pop_back();
        }
    };
    walk(f);
    return found;
}

} // namespace pnc
