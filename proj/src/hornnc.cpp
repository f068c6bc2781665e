#include "pnc/hornnc.hpp"

namespace pnc {

namespace {

struct flags {
    bool negative;
    bool horn_nc;
};

flags classify(const formula::ptr& f, hornnc_stats* stats) {
    if (stats)
        ++stats->nodes_visited;
    switch (f->kind()) {
    case connective::top:
    case connective::bottom:
        throw constant_error("constant encountered; simplify constants first");
    case connective::literal:
        return {f->negative(), true};
    case connective::conj: {
        flags out{true, true};
        for (const auto& c : f->children()) {
            flags child = classify(c, stats);
            out.negative = out.negative && child.negative;
            out.horn_nc = out.horn_nc && child.horn_nc;
        }
        // Empty conjunction is a top constant in disguise.
        if (f->children().empty())
            throw constant_error("constant encountered; simplify constants first");
        return out;
    }
    case connective::disj: {
        if (f->children().empty())
            throw constant_error("constant encountered; simplify constants first");
        bool all_negative = true;
        int non_negative = 0;
        bool non_negative_horn = true;
        for (const auto& c : f->children()) {
            flags child = classify(c, stats);
            if (!child.negative) {
                ++non_negative;
                non_negative_horn = non_negative_horn && child.horn_nc;
            }
            all_negative = all_negative && child.negative;
        }
        return {all_negative, non_negative <= 1 && non_negative_horn};
    }
    }
    return {false, false};
}

} // namespace

bool is_negative(const formula::ptr& f, hornnc_stats* stats) {
    return classify(f, stats).negative;
}

bool is_horn_nc(const formula::ptr& f, hornnc_stats* stats) {
    return classify(f, stats).horn_nc;
}

bool is_horn_nc_base(const base& s) {
    for (const auto& item : s.items) {
        formula::ptr f = simplify_constants(item.f);
        if (f->is_constant())
            continue;
        if (!is_horn_nc(f))
            return false;
    }
    return true;
}

} // namespace pnc
