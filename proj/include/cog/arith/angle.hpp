#pragma once

#include <string>

#include "cog/arith/quadratic.hpp"

namespace cog {

/// A point of the circle, stored as a fraction of a full turn in [0, 1).
class Angle {
public:
    Angle() = default;
    /// Reduces the value mod 1 by adjusting the rational part only.
    explicit Angle(const Quad& turns);

    static Angle from_rat(const Rat& turns) { return Angle(Quad(turns)); }

    const Quad& turns() const { return turns_; }
    const Rat& rat_part() const { return turns_.rat(); }
    const Rat& irr_part() const { return turns_.sqrt2(); }
    bool is_rational() const { return turns_.is_rational(); }
    bool is_zero() const { return turns_.is_zero(); }

    Angle operator+(const Angle& other) const { return Angle(turns_ + other.turns_); }
    Angle operator-(const Angle& other) const { return Angle(turns_ - other.turns_); }
    Angle operator-() const { return Angle(-turns_); }
    Angle times(const Int& k) const { return Angle(turns_ * Quad(Rat(k))); }

    friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
        return a.turns_ <=> b.turns_;
    }

private:
    Quad turns_;
};

/// The circle order: some rotation of (a,b,c) is strictly increasing in [0,1).
bool circle_between(const Angle& a, const Angle& b, const Angle& c);

std::string to_string(const Angle& angle);

}  // namespace cog
