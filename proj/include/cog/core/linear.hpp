#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cog/arith/quadratic.hpp"

namespace cog {

/// An archimedean subgroup of ℚ(√2): ℚ, ℤ, ℚ(√2), ℤ[1/p : p∈S] or ℤ[1/p : p∉E].
class LinearComponent {
public:
    enum class Kind { Rationals, Integers, QuadraticField, Localized, CoLocalized };

    static LinearComponent rationals() { return LinearComponent(Kind::Rationals, {}); }
    static LinearComponent integers() { return LinearComponent(Kind::Integers, {}); }
    static LinearComponent quadratic_field() { return LinearComponent(Kind::QuadraticField, {}); }
    /// ℤ[1/p : p ∈ primes]; an empty set gives ℤ.
    static LinearComponent localized(std::vector<std::int64_t> primes);
    /// ℤ[1/p : p ∉ excluded]; an empty set gives ℚ.
    static LinearComponent colocalized(std::vector<std::int64_t> excluded);

    Kind kind() const { return kind_; }
    /// S for Localized, E for CoLocalized, empty otherwise.
    const std::vector<std::int64_t>& primes() const { return primes_; }

    bool contains(const Quad& value) const;
    bool divisible_by(std::int64_t p) const;
    /// Divisible by every prime.
    bool is_divisible() const;
    /// Has a smallest positive element.
    bool is_discrete() const { return kind_ == Kind::Integers; }
    bool is_rational_valued() const { return kind_ != Kind::QuadraticField; }

    std::string describe() const;

    friend bool operator==(const LinearComponent&, const LinearComponent&) = default;

private:
    LinearComponent(Kind kind, std::vector<std::int64_t> primes)
        : kind_(kind), primes_(std::move(primes)) {}

    Kind kind_;
    std::vector<std::int64_t> primes_;
};

/// A point of a lexicographic product of components, leftmost coordinate dominant.
class LinearValue {
public:
    LinearValue() = default;
    explicit LinearValue(std::vector<Quad> coords) : coords_(std::move(coords)) {}
    static LinearValue zero(std::size_t size) { return LinearValue(std::vector<Quad>(size)); }
    /// The vector with 1 at index and 0 elsewhere.
    static LinearValue unit(std::size_t size, std::size_t index);

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    const Quad& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Quad>& coords() const { return coords_; }
    bool is_zero() const;
    /// Sign of the leading nonzero coordinate.
    int sign() const;

    LinearValue& operator+=(const LinearValue& other);
    LinearValue& operator-=(const LinearValue& other);
    friend LinearValue operator+(LinearValue a, const LinearValue& b) { return a += b; }
    friend LinearValue operator-(LinearValue a, const LinearValue& b) { return a -= b; }
    friend LinearValue operator-(const LinearValue& a);
    LinearValue scaled(const Quad& factor) const;
    LinearValue divided(const Quad& divisor) const;

    friend bool operator==(const LinearValue&, const LinearValue&) = default;
    friend std::strong_ordering operator<=>(const LinearValue& a, const LinearValue& b);

private:
    std::vector<Quad> coords_;
};

/// A linearly ordered group given as a lexicographic list of components.
class LinearDescriptor {
public:
    LinearDescriptor() = default;
    explicit LinearDescriptor(std::vector<LinearComponent> components)
        : components_(std::move(components)) {}

    std::size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }
    const LinearComponent& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<LinearComponent>& components() const { return components_; }

    bool contains(const LinearValue& value) const;
    bool divisible_by(std::int64_t p) const;
    bool is_divisible() const;
    /// Discrete iff the least significant component is discrete.
    bool is_discrete() const;

    std::string describe() const;

    friend bool operator==(const LinearDescriptor&, const LinearDescriptor&) = default;

private:
    std::vector<LinearComponent> components_;
};

/// Strictly increasing up to rotation: the linear cyclic order on three values.
template <class T>
bool rotation_increasing(const T& a, const T& b, const T& c) {
    return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

std::string to_string(const LinearValue& value);

}  // namespace cog
