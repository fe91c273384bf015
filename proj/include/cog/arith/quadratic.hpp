#pragma once

#include <compare>
#include <string>

#include "cog/arith/rational.hpp"

namespace cog {

/// An exact element rat + sqrt2 * √2 of the field ℚ(√2).
class Quad {
public:
    Quad() = default;
    Quad(Rat rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
    Quad(Rat rat, Rat sqrt2) : rat_(std::move(rat)), sqrt2_(std::move(sqrt2)) {}
    Quad(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)

    const Rat& rat() const { return rat_; }
    const Rat& sqrt2() const { return sqrt2_; }

    bool is_rational() const { return sqrt2_ == 0; }
    bool is_zero() const { return rat_ == 0 && sqrt2_ == 0; }

    /// Exact sign: compares rat² with 2·sqrt2² when the parts have opposite signs.
    int sign() const;

    /// Greatest integer not exceeding the value.
    Int floor() const;

    Quad& operator+=(const Quad& other);
    Quad& operator-=(const Quad& other);
    Quad& operator*=(const Quad& other);
    Quad& operator/=(const Quad& other);

    friend Quad operator+(Quad a, const Quad& b) { return a += b; }
    friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
    friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
    friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
    friend Quad operator-(const Quad& a) { return Quad(-a.rat_, -a.sqrt2_); }

    friend bool operator==(const Quad& a, const Quad& b) {
        return a.rat_ == b.rat_ && a.sqrt2_ == b.sqrt2_;
    }
    friend std::strong_ordering operator<=>(const Quad& a, const Quad& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rat rat_;
    Rat sqrt2_;
};

std::string to_string(const Quad& value);

}  // namespace cog
