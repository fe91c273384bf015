#pragma once

// Hand-derived n-spine tables for three lexicographic stacks, worked out from the closed forms:
// chain = {0} ∪ {H_p : p | n}; A on every chain member; F on members equal to some H_p;
// Dk only on the top member when G/H_top is discrete; β_p(C_j) = 1 iff C_j ⊆ H_p ⊊ C_{j+1};
// α_{p,k}(C) = 1 iff p^{k+1} | n and H_p ⊆ C. Depth counts trailing linear-part blocks.

#include <sstream>
#include <string>
#include <vector>

#include "cog/core/relation.hpp"
#include "cog/theory/theory.hpp"

namespace cog::testing {

inline std::string render(const SpineLevel& level) {
    std::ostringstream out;
    out << "d=" << level.depth << " p=[";
    for (std::size_t i = 0; i < level.primes.size(); ++i) {
        out << (i == 0 ? "" : ",") << level.primes[i];
    }
    out << "]" << (level.a ? " A" : "") << (level.f ? " F" : "") << (level.dk ? " Dk" : "") << " b{";
    bool first = true;
    for (const auto& [p, m] : level.beta) {
        out << (first ? "" : ",") << p << ":" << to_string(m);
        first = false;
    }
    out << "} a{";
    first = true;
    for (const auto& [key, m] : level.alpha) {
        out << (first ? "" : ",") << key.first << "." << key.second << ":" << to_string(m);
        first = false;
    }
    out << "}";
    return out.str();
}

inline std::vector<std::string> render(const SpineView& view) {
    std::vector<std::string> out;
    for (const auto& level : view.chain) {
        out.push_back(render(level));
    }
    return out;
}

struct SpineCase {
    std::string fixture;
    std::int64_t n;
    std::vector<std::string> expected;
};

/// unit: the UNIT-family order on ℚ; H_2 = H_3 = ℚ tail (depth 1), G/H_p discrete.
inline Model spine_fixture_unit() {
    return lex_product(Model::q_cyclic(QOrderSpec{Angle(), Rat(1), FFamily::unit()}),
                       LinearDescriptor({LinearComponent::rationals()}));
}

/// two_zero: f_2 ≡ 0; H_2 = l(G) (depth 2), H_3 = ℚ tail (depth 1), dense quotients.
inline Model spine_fixture_two_zero() {
    return lex_product(Model::q_cyclic(QOrderSpec{Angle(), Rat(1), FFamily(DefaultRule::Unit, {{2, {}}})}),
                       LinearDescriptor({LinearComponent::rationals()}));
}

/// wound: ℤ[1/2] ⃗× ℤ[1/q : q ≠ 2] wound at (1,1), then ⃗× ℚ; H_2 depth 1, H_3 depth 2, dense.
inline Model spine_fixture_wound() {
    return lex_product(Model::wound_round(LinearDescriptor({LinearComponent::localized({2}),
                                                            LinearComponent::colocalized({2})}),
                                          LinearValue({Quad(Rat(1)), Quad(Rat(1))})),
                       LinearDescriptor({LinearComponent::rationals()}));
}

inline Model spine_fixture(const std::string& name) {
    if (name == "unit") {
        return spine_fixture_unit();
    }
    if (name == "two_zero") {
        return spine_fixture_two_zero();
    }
    return spine_fixture_wound();
}

inline std::vector<SpineCase> spine_cases() {
    return {
        {"unit", 2, {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0}", "d=1 p=[2] A F Dk b{2:1} a{2.0:1,2.1:0}"}},
        {"unit", 3, {"d=0 p=[] A b{3:0} a{3.0:0,3.1:0}", "d=1 p=[3] A F Dk b{3:1} a{3.0:1,3.1:0}"}},
        {"unit", 4,
         {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0,2.2:0}", "d=1 p=[2] A F Dk b{2:1} a{2.0:1,2.1:1,2.2:0}"}},
        {"unit", 6,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,3.0:0,3.1:0}",
          "d=1 p=[2,3] A F Dk b{2:1,3:1} a{2.0:1,2.1:0,3.0:1,3.1:0}"}},
        {"unit", 12,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,2.2:0,3.0:0,3.1:0}",
          "d=1 p=[2,3] A F Dk b{2:1,3:1} a{2.0:1,2.1:1,2.2:0,3.0:1,3.1:0}"}},

        {"two_zero", 2, {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0}", "d=2 p=[2] A F b{2:1} a{2.0:1,2.1:0}"}},
        {"two_zero", 3, {"d=0 p=[] A b{3:0} a{3.0:0,3.1:0}", "d=1 p=[3] A F b{3:1} a{3.0:1,3.1:0}"}},
        {"two_zero", 4,
         {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0,2.2:0}", "d=2 p=[2] A F b{2:1} a{2.0:1,2.1:1,2.2:0}"}},
        {"two_zero", 6,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,3.0:0,3.1:0}",
          "d=1 p=[3] A F b{2:0,3:1} a{2.0:0,2.1:0,3.0:1,3.1:0}",
          "d=2 p=[2] A F b{2:1,3:0} a{2.0:1,2.1:0,3.0:1,3.1:0}"}},
        {"two_zero", 12,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,2.2:0,3.0:0,3.1:0}",
          "d=1 p=[3] A F b{2:0,3:1} a{2.0:0,2.1:0,2.2:0,3.0:1,3.1:0}",
          "d=2 p=[2] A F b{2:1,3:0} a{2.0:1,2.1:1,2.2:0,3.0:1,3.1:0}"}},

        {"wound", 2, {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0}", "d=1 p=[2] A F b{2:1} a{2.0:1,2.1:0}"}},
        {"wound", 3, {"d=0 p=[] A b{3:0} a{3.0:0,3.1:0}", "d=2 p=[3] A F b{3:1} a{3.0:1,3.1:0}"}},
        {"wound", 4,
         {"d=0 p=[] A b{2:0} a{2.0:0,2.1:0,2.2:0}", "d=1 p=[2] A F b{2:1} a{2.0:1,2.1:1,2.2:0}"}},
        {"wound", 6,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,3.0:0,3.1:0}",
          "d=1 p=[2] A F b{2:1,3:0} a{2.0:1,2.1:0,3.0:0,3.1:0}",
          "d=2 p=[3] A F b{2:0,3:1} a{2.0:1,2.1:0,3.0:1,3.1:0}"}},
        {"wound", 12,
         {"d=0 p=[] A b{2:0,3:0} a{2.0:0,2.1:0,2.2:0,3.0:0,3.1:0}",
          "d=1 p=[2] A F b{2:1,3:0} a{2.0:1,2.1:1,2.2:0,3.0:0,3.1:0}",
          "d=2 p=[3] A F b{2:0,3:1} a{2.0:1,2.1:1,2.2:0,3.0:1,3.1:0}"}},
    };
}

}  // namespace cog::testing
