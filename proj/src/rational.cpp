#include "pnc/rational.hpp"

#include <cctype>

namespace pnc {

rational rational::from_decimal(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty number");
    std::size_t i = 0;
    std::int64_t int_part = 0;
    bool any_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        int_part = int_part * 10 + (text[i] - '0');
        any_digit = true;
        ++i;
    }
    std::int64_t num = int_part;
    std::int64_t den = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        bool frac_digit = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (den > 100'000'000'000'000'000LL)
                throw std::invalid_argument("number has too many decimal digits: " + text);
            num = num * 10 + (text[i] - '0');
            den *= 10;
            frac_digit = true;
            ++i;
        }
        if (!frac_digit && !any_digit)
            throw std::invalid_argument("malformed number: " + text);
        any_digit = any_digit || frac_digit;
    }
    if (!any_digit || i != text.size())
        throw std::invalid_argument("malformed number: " + text);
    return rational(num, den);
}

std::string rational::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1)
        return std::to_string(num_) + "/" + std::to_string(den_);
    // Scale to a power of ten and print with the decimal point inserted.
    int digits = twos > fives ? twos : fives;
    __int128 scaled = static_cast<__int128>(num_);
    for (int i = 0; i < digits; ++i)
        scaled *= 10;
    scaled /= den_;
    std::string body;
    if (scaled == 0)
        body = "0";
    while (scaled > 0) {
        body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(body.size()) <= digits)
        body.insert(body.begin(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0')
        body.pop_back();
    if (body.back() == '.')
        body.pop_back();
    return body;
}

} // namespace pnc
