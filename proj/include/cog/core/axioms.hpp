#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cog/core/model.hpp"

namespace cog {

struct ExhaustiveMode {
    std::int64_t max_size = 64;
};

struct SampledMode {
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    std::int64_t height = 100;
};

using CheckMode = std::variant<ExhaustiveMode, SampledMode>;

struct AxiomViolation {
    std::string axiom;
    std::vector<Element> witness;
};

struct AxiomReport {
    std::string mode;
    std::size_t triples_checked = 0;
    std::size_t quadruples_checked = 0;
    /// Up to a few witnesses per axiom.
    std::vector<AxiomViolation> violations;
    /// Total violation count per axiom.
    std::map<std::string, std::size_t> totals;

    bool passed() const { return totals.empty(); }
    std::size_t count(const std::string& axiom) const;
};

using RelationFn = std::function<bool(const Element&, const Element&, const Element&)>;

/// Checks strictness, cyclicity, totality, compatibility and the cocycle identity,
/// plus the group laws of the model's operations.
AxiomReport check_axioms(const Model& model, const CheckMode& mode);

/// Same checks with the model's group law but a caller-supplied relation.
AxiomReport check_axioms(const Model& model, const RelationFn& relation, const CheckMode& mode);

}  // namespace cog
