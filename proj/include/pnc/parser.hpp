#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "pnc/formula.hpp"

namespace pnc {

struct parse_error : error {
    parse_error(const std::string& msg, int line, int column)
        : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    int line;
    int column;
};

/// Grammar: F ::= IDENT | -IDENT | true | false | (or F*) | (and F*)
/// Negation binds to propositions only; anything else is rejected as non-NNF.
formula::ptr parse_formula(std::string_view text);

/// Base file: one `FORMULA : WEIGHT` entry per line, `#` starts a comment.
/// Weights are exact decimals in (0,1].
base parse_base(std::string_view text);
base parse_base(std::istream& in);

} // namespace pnc
