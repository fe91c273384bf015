#include "cog/arith/quadratic.hpp"

#include "cog/error.hpp"

namespace cog {

int Quad::sign() const {
    int s0 = sgn(rat_);
    int s1 = sgn(sqrt2_);
    if (s1 == 0) {
        return s0;
    }
    if (s0 == 0 || s0 == s1) {
        return s1;
    }
    // Opposite signs: the part with the larger square wins.
    Rat lhs = rat_ * rat_;
    Rat rhs = 2 * sqrt2_ * sqrt2_;
    return lhs > rhs ? s0 : s1;
}

namespace {

// floor(q·√2) via floor(sqrt(x)) = isqrt(floor(x)).
Int floor_sqrt2_multiple(const Rat& q) {
    if (q == 0) {
        return 0;
    }
    Rat square = 2 * q * q;
    Int root;
    Int whole = floor_of(square);
    mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
    if (q > 0) {
        return root;
    }
    // q·√2 is irrational, so ceil = floor + 1.
    return -(root + 1);
}

}  // namespace

Int Quad::floor() const {
    Int estimate = floor_of(rat_) + floor_sqrt2_multiple(sqrt2_);
    Quad next(rat_ - Rat(estimate + 1), sqrt2_);
    if (next.sign() >= 0) {
        return estimate + 1;
    }
    return estimate;
}

Quad& Quad::operator+=(const Quad& other) {
    rat_ += other.rat_;
    sqrt2_ += other.sqrt2_;
    return *this;
}

Quad& Quad::operator-=(const Quad& other) {
    rat_ -= other.rat_;
    sqrt2_ -= other.sqrt2_;
    return *this;
}

Quad& Quad::operator*=(const Quad& other) {
    Rat r = rat_ * other.rat_ + 2 * sqrt2_ * other.sqrt2_;
    Rat s = rat_ * other.sqrt2_ + sqrt2_ * other.rat_;
    rat_ = std::move(r);
    sqrt2_ = std::move(s);
    return *this;
}

Quad& Quad::operator/=(const Quad& other) {
    if (other.is_zero()) {
        throw DomainError("division by zero in Q(sqrt2)");
    }
    if (other.is_rational()) {
        rat_ /= other.rat_;
        sqrt2_ /= other.rat_;
        return *this;
    }
    // Multiply by the conjugate of the divisor.
    Rat norm = other.rat_ * other.rat_ - 2 * other.sqrt2_ * other.sqrt2_;
    *this *= Quad(other.rat_, -other.sqrt2_);
    rat_ /= norm;
    sqrt2_ /= norm;
    return *this;
}

std::string to_string(const Quad& value) {
    if (value.is_rational()) {
        return to_string(value.rat());
    }
    return to_string(value.rat()) + (value.sqrt2() > 0 ? "+" : "-") +
           to_string(abs(value.sqrt2())) + "*sqrt2";
}

}  // namespace cog
