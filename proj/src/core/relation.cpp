#include "cog/core/relation.hpp"

#include "cog/error.hpp"

namespace cog {

bool eval_R(const Model& model, const Element& g1, const Element& g2, const Element& g3) {
    return model.relation(g1, g2, g3);
}

int cocycle(const Model& model, const Element& g1, const Element& g2, const Element& g3) {
    if (model.relation(g1, g2, g3)) {
        return 1;
    }
    if (model.relation(g3, g2, g1)) {
        return -1;
    }
    return 0;
}

bool eval_R_chain(const Model& model, const std::vector<Element>& gs) {
    if (gs.size() < 3) {
        throw UsageError("a relation chain needs at least three elements");
    }
    for (std::size_t i = 1; i + 1 < gs.size(); ++i) {
        if (!model.relation(gs[0], gs[i], gs[i + 1])) {
            return false;
        }
    }
    return true;
}

Model lex_product(const Model& top, const LinearDescriptor& bottom) {
    std::vector<LinearComponent> components = top.tail().components();
    components.insert(components.end(), bottom.components().begin(), bottom.components().end());
    return Model(top.base(), LinearDescriptor(std::move(components)));
}

}  // namespace cog
