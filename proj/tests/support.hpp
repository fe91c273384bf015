#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cog/core/model.hpp"

namespace cog::testing {

inline Rat q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline LinearValue lin(std::initializer_list<Rat> coords) {
    std::vector<Quad> out;
    for (const auto& c : coords) {
        out.emplace_back(c);
    }
    return LinearValue(std::move(out));
}

inline LinearDescriptor rationals(std::size_t copies = 1) {
    return LinearDescriptor(std::vector<LinearComponent>(copies, LinearComponent::rationals()));
}

inline LinearDescriptor integers() { return LinearDescriptor({LinearComponent::integers()}); }

inline Element residue(std::int64_t r, LinearValue tail = {}) { return Element{Residue{r}, std::move(tail)}; }

inline Element angle(const Rat& rat, const Rat& irr = Rat(0)) { return Element{Angle(Quad(rat, irr)), {}}; }

inline Element rational(const Rat& x, LinearValue tail = {}) { return Element{x, std::move(tail)}; }

inline Element wound(LinearValue x, LinearValue tail = {}) { return Element{std::move(x), std::move(tail)}; }

/// θ = irr·√2 turns, with the default-unit family unless given.
inline QOrderSpec arch_spec(const Rat& irr, FFamily family = FFamily::unit()) {
    return QOrderSpec{Angle(Quad(Rat(0), irr)), Rat(0), std::move(family)};
}

}  // namespace cog::testing
