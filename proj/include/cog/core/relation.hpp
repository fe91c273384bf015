#pragma once

#include <vector>

#include "cog/core/model.hpp"

namespace cog {

bool eval_R(const Model& model, const Element& g1, const Element& g2, const Element& g3);

/// 1 if R(g1,g2,g3), −1 if R(g3,g2,g1), 0 if two arguments coincide.
int cocycle(const Model& model, const Element& g1, const Element& g2, const Element& g3);

/// R(g0, g1, …, gn) read as the conjunction of R(g0, g_i, g_{i+1}) for 0 < i < n.
bool eval_R_chain(const Model& model, const std::vector<Element>& gs);

/// The lexicographic product top ⃗× bottom.
Model lex_product(const Model& top, const LinearDescriptor& bottom);

}  // namespace cog
