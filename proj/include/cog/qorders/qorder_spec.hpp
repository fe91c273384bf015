#pragma once

#include "cog/arith/angle.hpp"
#include "cog/qorders/family.hpp"

namespace cog {

/// Parameters of a cyclic order on ℚ: m/n ↦ (m(θ + f(n))/n turns, (m/n)·a).
struct QOrderSpec {
    Angle theta;
    Rat a;
    FFamily family;

    /// Throws ConstructionError unless a ≥ 0, a = 0 ⇒ θ irrational, and rational θ is 0.
    void validate() const;

    friend bool operator==(const QOrderSpec&, const QOrderSpec&) = default;
};

/// Image of a rational under the embedding into 𝕌 ⃗× ℚ.
struct QEmbedding {
    Angle angle;
    Rat linear;
};

QEmbedding embed(const QOrderSpec& spec, const Rat& x);

}  // namespace cog
