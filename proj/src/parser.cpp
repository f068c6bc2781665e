#include "pnc/parser.hpp"

#include <cctype>
#include <sstream>

namespace pnc {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

class cursor {
public:
    cursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    int column() const { return static_cast<int>(pos_) + 1; }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, column()); }

    std::string take_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string take_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && number_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

formula::ptr parse_expr(cursor& c) {
    if (c.at_end())
        c.fail("expected a formula");
    char ch = c.peek();
    if (ch == '(') {
        c.advance();
        c.skip_ws();
        if (c.at_end() || !ident_start(c.peek()))
            c.fail("expected 'or' or 'and' after '('");
        int head_col = c.column();
        std::string head = c.take_ident();
        if (head != "or" && head != "and")
            throw parse_error("unknown connective '" + head + "'", c.line(), head_col);
        std::vector<formula::ptr> children;
        while (!c.at_end() && c.peek() != ')')
            children.push_back(parse_expr(c));
        if (c.at_end())
            c.fail("missing ')'");
        c.advance();
        return head == "or" ? formula::make_disj(std::move(children))
                            : formula::make_conj(std::move(children));
    }
    if (ch == '-') {
        int col = c.column();
        c.advance();
        if (c.at_end() || !ident_start(c.peek()))
            throw parse_error("negation applies to propositions only (input must be NNF)", c.line(), col);
        std::string name = c.take_ident();
        if (name == "true" || name == "false")
            throw parse_error("negation applies to propositions only (input must be NNF)", c.line(), col);
        return formula::make_literal(std::move(name), true);
    }
    if (ident_start(ch)) {
        std::string name = c.take_ident();
        if (name == "true")
            return formula::make_top();
        if (name == "false")
            return formula::make_bottom();
        return formula::make_literal(std::move(name), false);
    }
    c.fail(std::string("unexpected character '") + ch + "'");
}

weight parse_weight(cursor& c) {
    c.skip_ws();
    if (c.at_end() || !number_char(c.peek()))
        c.fail("expected a weight");
    int col = c.column();
    std::string text = c.take_number();
    rational value;
    try {
        value = rational::from_decimal(text);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), c.line(), col);
    }
    try {
        return weight(value);
    } catch (const std::out_of_range&) {
        throw parse_error("weight " + text + " is outside (0,1]", c.line(), col);
    }
}

} // namespace

formula::ptr parse_formula(std::string_view text) {
    cursor c(text, 1);
    formula::ptr f = parse_expr(c);
    if (!c.at_end())
        c.fail("trailing input after formula");
    return f;
}

base parse_base(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_base(in);
}

base parse_base(std::istream& in) {
    base result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        cursor c(line, line_no);
        if (c.at_end() || c.peek() == '#')
            continue;
        formula::ptr f = parse_expr(c);
        c.skip_ws();
        if (c.at_end() || c.peek() != ':')
            c.fail("expected ':' between formula and weight");
        c.advance();
        weight w = parse_weight(c);
        c.skip_ws();
        if (!c.at_end() && c.peek() != '#')
            c.fail("trailing input after weight");
        result.items.push_back(weighted_formula{std::move(f), w});
    }
    return result;
}

} // namespace pnc
