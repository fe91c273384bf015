#include "cog/arith/angle.hpp"

namespace cog {

Angle::Angle(const Quad& turns) : turns_(turns) {
    Int whole = turns.floor();
    if (whole != 0) {
        turns_ = Quad(turns.rat() - Rat(whole), turns.sqrt2());
    }
}

bool circle_between(const Angle& a, const Angle& b, const Angle& c) {
    return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

std::string to_string(const Angle& angle) { return to_string(angle.turns()); }

}  // namespace cog
