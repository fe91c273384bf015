#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cog/core/axioms.hpp"
#include "cog/core/model.hpp"
#include "cog/solver/solver.hpp"
#include "cog/theory/theory.hpp"
#include <json.hpp>

namespace cog::io {

using Json = nlohmann::ordered_json;

// Exact values. Rationals are "p/q" strings (integers may also be given as JSON numbers on input);
// quadratic values are rationals when √2-free and {"rat": "p/q", "sqrt2": "r/s"} otherwise.
// Malformed input throws ValidationError naming the offending location.

Json to_json(const Rat& value);
Rat rat_from_json(const Json& json, const std::string& where);
Json to_json(const Quad& value);
Quad quad_from_json(const Json& json, const std::string& where);
Json to_json(const LinearValue& value);
LinearValue linear_value_from_json(const Json& json, const std::string& where);

/// "rationals", "integers", "quadratic_field", {"localized": [p, …]} or {"colocalized": [p, …]}.
Json to_json(const LinearComponent& component);
LinearComponent component_from_json(const Json& json, const std::string& where);
Json to_json(const LinearDescriptor& descriptor);
LinearDescriptor descriptor_from_json(const Json& json, const std::string& where);

/// {"default": "unit" | "zero", "digits": {"p": [d, …], …}}.
Json to_json(const FFamily& family);
FFamily family_from_json(const Json& json, const std::string& where);

/// Models by "kind": finite_cyclic, circle, q_cyclic, wound_round, linear, lex_product.
Json to_json(const Model& model);
Model model_from_json(const Json& json, const std::string& where = "model");

/// The base coordinate alone when the model has no tail, the tail alone for linear models,
/// {"base": …, "tail": […]} otherwise.
Json element_to_json(const Model& model, const Element& element);
Element element_from_json(const Model& model, const Json& json, const std::string& where);

struct SpecFile {
    Model model = Model::finite_cyclic(1);
    Bindings bindings;
    std::optional<std::int64_t> height;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;
    std::string description;
};

/// Unknown fields are rejected with ValidationError.
SpecFile spec_from_json(const Json& json);
Json to_json(const SpecFile& spec);
SpecFile load_spec(const std::string& path);

Json to_json(const AxiomReport& report);
Json to_json(const Classification& classification);
Json to_json(const TheoryInvariant& invariant);
Json to_json(const Verdict& verdict);
Json to_json(const SpineView& view);
Json to_json(const OrderedPartition& partition);
Json to_json(const IntervalUnion& solution);
Json to_json(const Model& model, const VerifyReport& report);
Json to_json(const MinimalityVerdict& verdict);

}  // namespace cog::io
