#include "pnc/trace.hpp"

#include <sstream>

namespace pnc {

std::string render_trace(const derivation& d, int round_no) {
    std::ostringstream out;
    out << "round " << round_no << ":\n";
    for (const auto& step : d.steps) {
        out << "  step " << step.id << ": " << rule_name(step.r) << " [";
        for (std::size_t i = 0; i < step.premises.size(); ++i) {
            if (i)
                out << ", ";
            out << step.premises[i];
        }
        out << "] -> " << render(step.conclusion) << " : " << step.w.to_string() << "\n";
    }
    if (d.empty_clause_found)
        out << "  empty clause found : " << d.empty_weight->to_string() << "\n";
    else
        out << "  fixpoint, no more resolvents apply\n";
    return out.str();
}

std::string render_trace(const solve_result& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.rounds.size(); ++i) {
        out << render_trace(r.rounds[i], static_cast<int>(i) + 1);
        if (r.rounds[i].empty_clause_found)
            out << "  strict cut above " << r.rounds[i].empty_weight->to_string() << "\n";
    }
    out << "Inc = " << r.inc.to_string() << "\n";
    return out.str();
}

} // namespace pnc
