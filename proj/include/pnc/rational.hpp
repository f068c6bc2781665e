#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pnc {

/// Exact rational arithmetic for necessity weights. Weights enter the system
/// as short decimals, so numerators/denominators stay tiny; int64 is plenty.
class rational {
public:
    rational() : num_(0), den_(1) {}

    rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    static rational from_int(std::int64_t n) { return rational(n, 1); }

    /// Parses "0.8", ".8", "1", "1.0" into an exact rational.
    static rational from_decimal(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const rational& o) const { return !(*this == o); }
    bool operator<(const rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const rational& o) const { return !(o < *this); }
    bool operator>(const rational& o) const { return o < *this; }
    bool operator>=(const rational& o) const { return !(*this < o); }

    rational operator-(const rational& o) const {
        return rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    static rational min(const rational& a, const rational& b) { return a < b ? a : b; }
    static rational max(const rational& a, const rational& b) { return a < b ? b : a; }

    bool is_zero() const { return num_ == 0; }

    /// Shortest exact decimal when the denominator is of the form 2^a*5^b,
    /// otherwise "num/den".
    std::string to_string() const;

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Necessity lower bound in (0,1]. Weight zero is rejected outright.
class weight {
public:
    explicit weight(rational v) : value_(std::move(v)) {
        if (!(rational(0, 1) < value_) || !(value_ <= rational(1, 1)))
            throw std::out_of_range("weight: value must lie in (0,1], got " + value_.to_string());
    }

    static weight one() { return weight(rational(1, 1)); }

    const rational& value() const { return value_; }

    bool operator==(const weight& o) const { return value_ == o.value_; }
    bool operator!=(const weight& o) const { return value_ != o.value_; }
    bool operator<(const weight& o) const { return value_ < o.value_; }
    bool operator<=(const weight& o) const { return value_ <= o.value_; }
    bool operator>(const weight& o) const { return value_ > o.value_; }
    bool operator>=(const weight& o) const { return value_ >= o.value_; }

    static weight min(const weight& a, const weight& b) { return a < b ? a : b; }
    static weight max(const weight& a, const weight& b) { return a < b ? b : a; }

    std::string to_string() const { return value_.to_string(); }

private:
    rational value_;
};

} // namespace pnc
