#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cog/arith/angle.hpp"
#include "cog/core/linear.hpp"
#include "cog/qorders/qorder_spec.hpp"

namespace cog {

struct Residue {
    std::int64_t value = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// The base coordinate of an element; which alternative is used depends on the model.
using BaseValue = std::variant<Residue, Angle, Rat, LinearValue>;

/// A model-tagged group element: base coordinate plus lexicographic tail.
struct Element {
    BaseValue base;
    LinearValue tail;

    friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& element);

/// ℤ/n with its natural cyclic order.
struct FiniteCyclic {
    std::int64_t n = 1;
    friend bool operator==(const FiniteCyclic&, const FiniteCyclic&) = default;
};

/// A subgroup of the circle: all rational angles, all ℚ(√2) angles, or a finitely generated one.
struct CircleSubgroup {
    enum class Kind { Rational, Quadratic, Generated };
    Kind kind = Kind::Rational;
    std::vector<Angle> generators;

    friend bool operator==(const CircleSubgroup&, const CircleSubgroup&) = default;
};

/// ℚ with the cyclic order induced by an embedding into 𝕌 ⃗× ℚ.
struct QCyclic {
    QOrderSpec spec;
    friend bool operator==(const QCyclic&, const QCyclic&) = default;
};

/// Γ/⟨z⟩ for a linearly ordered Γ and a positive cofinal z, on representatives in [0, z).
struct WoundRound {
    LinearDescriptor gamma;
    LinearValue z;
    friend bool operator==(const WoundRound&, const WoundRound&) = default;
};

using BaseModel = std::variant<FiniteCyclic, CircleSubgroup, QCyclic, WoundRound>;

/// A concrete cyclically ordered abelian group: a base model lexicographically
/// followed by a (possibly empty) linearly ordered tail.
///
/// Nested lexicographic products are flattened: (K ⃗× Γ₁) ⃗× Γ₂ is stored as K ⃗× (Γ₁ ⃗× Γ₂).
class Model {
public:
    explicit Model(BaseModel base, LinearDescriptor tail = {});

    static Model finite_cyclic(std::int64_t n);
    static Model rational_circle();
    static Model quadratic_circle();
    static Model generated_circle(std::vector<Angle> generators);
    static Model q_cyclic(QOrderSpec spec);
    static Model wound_round(LinearDescriptor gamma, LinearValue z);
    /// The linear cyclic order on a linearly ordered group.
    static Model linear(LinearDescriptor group);

    const BaseModel& base() const { return base_; }
    const LinearDescriptor& tail() const { return tail_; }
    bool has_tail() const { return !tail_.empty(); }

    Element identity() const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element subtract(const Element& a, const Element& b) const { return add(a, negate(b)); }
    /// k·a for any integer k.
    Element multiple(const Element& a, const Int& k) const;

    bool contains(const Element& element) const;
    /// Throws DomainError when the element is not in the model.
    void require(const Element& element) const;

    bool relation(const Element& a, const Element& b, const Element& c) const;

    /// Number of elements when finite.
    std::optional<std::int64_t> finite_order() const;
    /// All elements of a finite model, in cyclic order starting at the identity.
    std::vector<Element> elements() const;

    /// The element with base coordinate only and zero tail.
    Element from_base(BaseValue base) const;

    std::string describe() const;

    friend bool operator==(const Model&, const Model&) = default;

private:
    bool base_relation(const BaseValue& a, const BaseValue& b, const BaseValue& c) const;
    bool base_contains(const BaseValue& value) const;

    BaseModel base_;
    LinearDescriptor tail_;
};

/// Reduces a Γ-value into [0, z).
LinearValue reduce_mod(const LinearValue& value, const LinearValue& z);

/// Lexicographic-product rule on three (top, tail) points given the top comparisons.
bool lex_rule(bool top12, bool top23, bool top13, bool top_relation, const LinearValue& x1,
              const LinearValue& x2, const LinearValue& x3);

/// ℤ-basis of the subgroup of ℚ(√2)/ℤ generated by angles (as a lattice in ℚ²).
class AngleLattice {
public:
    explicit AngleLattice(const std::vector<Angle>& generators);
    bool contains(const Angle& angle) const;
    /// Order of the generated group when all generators are rational.
    std::optional<std::int64_t> finite_order() const;
    /// Order of the (cyclic) torsion subgroup.
    std::int64_t torsion_order() const;
    /// Whether some generator is irrational.
    bool has_irrational() const { return second_ != 0 || shear_ != 0; }

private:
    Int scale_;
    Int first_;        // basis row (first_, shear_)
    Int shear_;
    Int second_;       // basis row (0, second_); 0 means rank one
};

}  // namespace cog
