#pragma once

#include <cstdint>
#include <vector>

#include "cog/core/model.hpp"
#include "cog/qorders/qorder_spec.hpp"

namespace cog {

/// The cyclically ordered group on ℚ given by a spec. Throws ConstructionError on invalid specs.
Model build_qcyclic(const QOrderSpec& spec);

/// f_{G,p}(n): with g + H_p the unit of G/H_p and pⁿh = g, U(h) = f_{G,p}(n)/pⁿ turns.
/// Throws DomainError when G/H_p is dense or g has no pⁿ-th root.
Int f_G_p(const Model& model, std::int64_t p, int n);

/// φ_{G,p}(n): the inverse of f_{G,p}(n) modulo pⁿ.
Int phi_G_p(const Model& model, std::int64_t p, int n);

/// φ_p(1..depth): the base-p digits of φ_{G,p}(depth).
std::vector<int> characteristic_digits(const Model& model, std::int64_t p, int depth);

/// Whether the order on ℚ has no proper nontrivial c-convex subgroup.
bool is_c_archimedean(const QOrderSpec& spec);
/// Throws UsageError unless the model is a cyclic order on ℚ.
bool is_c_archimedean(const Model& model);

}  // namespace cog
