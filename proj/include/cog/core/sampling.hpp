#pragma once

#include <cstdint>
#include <random>

#include "cog/core/model.hpp"

namespace cog {

/// Seeded generator with platform-independent integer draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool chance(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }

private:
    std::mt19937_64 engine_;
};

/// A rational m/n with |m| ≤ height and 1 ≤ n ≤ height.
Rat sample_rat(Rng& rng, std::int64_t height);

Quad sample_component_value(const LinearComponent& component, Rng& rng, std::int64_t height);
LinearValue sample_linear_value(const LinearDescriptor& group, Rng& rng, std::int64_t height);

/// A random element of the model with numerators and denominators bounded by height.
Element sample_element(const Model& model, Rng& rng, std::int64_t height);

}  // namespace cog
