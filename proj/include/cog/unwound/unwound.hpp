#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cog/core/model.hpp"

namespace cog {

/// An element (winding, g) of the unwound ℤ × G.
struct UnwoundElement {
    Int winding;
    Element g;

    friend bool operator==(const UnwoundElement&, const UnwoundElement&) = default;
};

std::string to_string(const UnwoundElement& x);

/// The Rieger unwound of a cyclically ordered group, a linearly ordered group.
class Unwound {
public:
    explicit Unwound(Model base) : base_(std::move(base)) {}

    const Model& base() const { return base_; }

    UnwoundElement identity() const { return {Int(0), base_.identity()}; }
    /// z_G = (1, e).
    UnwoundElement z() const { return {Int(1), base_.identity()}; }

    std::strong_ordering compare(const UnwoundElement& a, const UnwoundElement& b) const;
    bool less(const UnwoundElement& a, const UnwoundElement& b) const { return compare(a, b) < 0; }

    /// Winding-bit product: one extra turn when the base sum wraps past e.
    UnwoundElement mul(const UnwoundElement& a, const UnwoundElement& b) const;
    UnwoundElement inverse(const UnwoundElement& a) const;
    /// a^k for any integer k.
    UnwoundElement power(const UnwoundElement& a, const Int& k) const;

    Element project(const UnwoundElement& x) const { return x.g; }
    UnwoundElement embed(const Element& g) const { return {Int(0), g}; }

private:
    Model base_;
};

using SubgroupPredicate = std::function<bool(const Element&)>;

/// The lift of a c-convex proper subgroup H into uw(G): (0,g) on the positive cone, (−1,g) otherwise.
/// Throws PreconditionError when g ∉ H.
UnwoundElement convex_lift(const Model& model, const SubgroupPredicate& in_subgroup, const Element& g);

/// The wound-round Γ/⟨z⟩ of a linearly ordered group by a positive cofinal z.
Model wound_round(LinearDescriptor gamma, LinearValue z);

/// The unwound as a linearly ordered group with its z_G, when it is expressible as a descriptor.
struct UnwoundDescriptor {
    LinearDescriptor gamma;
    LinearValue z;
};
std::optional<UnwoundDescriptor> unwound_descriptor(const Model& model);

/// Image of an element in the descriptor form of the unwound (for finite cyclic, circle and wound-round bases).
LinearValue to_unwound_coordinates(const Model& model, const UnwoundElement& x);
/// Inverse of to_unwound_coordinates. Throws DomainError for values outside the unwound.
UnwoundElement from_unwound_coordinates(const Model& model, const LinearValue& value);

/// Whether the model has an element of order exactly p (p prime). Throws UnsupportedError when undecidable.
bool has_p_torsion(const Model& model, std::int64_t p);

/// [p]G = |G/pG|, computed structurally.
std::int64_t count_p_classes(const Model& model, std::int64_t p);

/// [p]uw(G), computed structurally from [p]G and z_G's p-divisibility in the unwound.
std::int64_t count_unwound_p_classes(const Model& model, std::int64_t p);

/// [p]G for a finite model by enumeration of pG.
std::int64_t count_p_classes_brute(const Model& model, std::int64_t p);

/// [p] of a window of uw(G) for a finite base: classes of the windings |w| ≤ window under x ~ y iff
/// x·y⁻¹ is a p-th power found in a wider search window. Counts distinct classes met in the window.
std::int64_t count_unwound_p_classes_brute(const Model& model, std::int64_t p, std::int64_t window);

/// A y with yⁿ = z_G among windings |w| ≤ n and all base elements (finite base only).
std::optional<UnwoundElement> root_of_z_brute(const Model& model, std::int64_t n);

}  // namespace cog
