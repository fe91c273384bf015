#include "cog/unwound/unwound.hpp"

#include <algorithm>

#include "cog/arith/rational.hpp"
#include "cog/error.hpp"
#include "cog/util/overloaded.hpp"

namespace cog {

std::string to_string(const UnwoundElement& x) {
    return "(" + to_string(x.winding) + ", " + to_string(x.g) + ")";
}

std::strong_ordering Unwound::compare(const UnwoundElement& a, const UnwoundElement& b) const {
    base_.require(a.g);
    base_.require(b.g);
    if (a.winding != b.winding) {
        return a.winding < b.winding ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.g == b.g) {
        return std::strong_ordering::equal;
    }
    const Element e = base_.identity();
    if (a.g == e) {
        return std::strong_ordering::less;
    }
    if (b.g == e) {
        return std::strong_ordering::greater;
    }
    return base_.relation(e, a.g, b.g) ? std::strong_ordering::less : std::strong_ordering::greater;
}

UnwoundElement Unwound::mul(const UnwoundElement& a, const UnwoundElement& b) const {
    const Element e = base_.identity();
    Element sum = base_.add(a.g, b.g);
    bool wraps = a.g != e && (sum == e || base_.relation(e, sum, a.g));
    return {a.winding + b.winding + (wraps ? 1 : 0), std::move(sum)};
}

UnwoundElement Unwound::inverse(const UnwoundElement& a) const {
    if (a.g == base_.identity()) {
        return {-a.winding, a.g};
    }
    return {-a.winding - 1, base_.negate(a.g)};
}

UnwoundElement Unwound::power(const UnwoundElement& a, const Int& k) const {
    UnwoundElement base = k < 0 ? inverse(a) : a;
    Int exponent = abs(k);
    UnwoundElement out = identity();
    while (exponent > 0) {
        if (exponent % 2 == 1) {
            out = mul(out, base);
        }
        exponent /= 2;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return out;
}

UnwoundElement convex_lift(const Model& model, const SubgroupPredicate& in_subgroup, const Element& g) {
    model.require(g);
    if (!in_subgroup(g)) {
        throw PreconditionError("element " + to_string(g) + " is outside the subgroup");
    }
    const Element e = model.identity();
    bool positive = g == e || model.relation(e, g, model.add(g, g));
    return {Int(positive ? 0 : -1), g};
}

Model wound_round(LinearDescriptor gamma, LinearValue z) {
    return Model::wound_round(std::move(gamma), std::move(z));
}

namespace {

LinearValue concat(const LinearValue& head, const LinearValue& tail) {
    std::vector<Quad> coords = head.coords();
    coords.insert(coords.end(), tail.coords().begin(), tail.coords().end());
    return LinearValue(std::move(coords));
}

// [p] of a linearly ordered descriptor: each non p-divisible archimedean component contributes p.
std::int64_t descriptor_p_classes(const LinearDescriptor& group, std::int64_t p) {
    std::int64_t out = 1;
    for (const auto& component : group.components()) {
        if (!component.divisible_by(p)) {
            out *= p;
        }
    }
    return out;
}

}  // namespace

std::optional<UnwoundDescriptor> unwound_descriptor(const Model& model) {
    auto head = std::visit(
        Overloaded{
            [](const FiniteCyclic& m) -> std::optional<UnwoundDescriptor> {
                return UnwoundDescriptor{LinearDescriptor({LinearComponent::integers()}),
                                         LinearValue({Quad(Rat(m.n))})};
            },
            [](const CircleSubgroup& m) -> std::optional<UnwoundDescriptor> {
                switch (m.kind) {
                    case CircleSubgroup::Kind::Rational:
                        return UnwoundDescriptor{LinearDescriptor({LinearComponent::rationals()}),
                                                 LinearValue({Quad(Rat(1))})};
                    case CircleSubgroup::Kind::Quadratic:
                        return UnwoundDescriptor{LinearDescriptor({LinearComponent::quadratic_field()}),
                                                 LinearValue({Quad(Rat(1))})};
                    case CircleSubgroup::Kind::Generated: {
                        auto order = AngleLattice(m.generators).finite_order();
                        if (!order) {
                            return std::nullopt;
                        }
                        return UnwoundDescriptor{LinearDescriptor({LinearComponent::integers()}),
                                                 LinearValue({Quad(Rat(*order))})};
                    }
                }
                return std::nullopt;
            },
            [](const QCyclic&) -> std::optional<UnwoundDescriptor> { return std::nullopt; },
            [](const WoundRound& m) -> std::optional<UnwoundDescriptor> {
                return UnwoundDescriptor{m.gamma, m.z};
            },
        },
        model.base());
    if (!head) {
        return std::nullopt;
    }
    std::vector<LinearComponent> components = head->gamma.components();
    components.insert(components.end(), model.tail().components().begin(), model.tail().components().end());
    return UnwoundDescriptor{LinearDescriptor(std::move(components)),
                             concat(head->z, LinearValue::zero(model.tail().size()))};
}

LinearValue to_unwound_coordinates(const Model& model, const UnwoundElement& x) {
    auto descriptor = unwound_descriptor(model);
    if (!descriptor) {
        throw UnsupportedError("the unwound of " + model.describe() + " has no descriptor form");
    }
    model.require(x.g);
    LinearValue head = std::visit(
        Overloaded{
            [&](const FiniteCyclic&) { return LinearValue({Quad(Rat(std::get<Residue>(x.g.base).value))}); },
            [&](const CircleSubgroup& m) {
                const auto& turns = std::get<Angle>(x.g.base).turns();
                if (m.kind == CircleSubgroup::Kind::Generated) {
                    return LinearValue({turns * descriptor->z[0]});
                }
                return LinearValue({turns});
            },
            [&](const QCyclic&) { return LinearValue(); },
            [&](const WoundRound&) { return std::get<LinearValue>(x.g.base); },
        },
        model.base());
    LinearValue value = concat(head, x.g.tail);
    // A negative element of the tail over the base identity sits just below z, not below e.
    Int winding = x.winding;
    if (x.g.base == model.identity().base && x.g.tail.sign() < 0) {
        winding += 1;
    }
    return value + descriptor->z.scaled(Quad(Rat(winding)));
}

UnwoundElement from_unwound_coordinates(const Model& model, const LinearValue& value) {
    auto descriptor = unwound_descriptor(model);
    if (!descriptor) {
        throw UnsupportedError("the unwound of " + model.describe() + " has no descriptor form");
    }
    const LinearValue& z = descriptor->z;
    if (value.size() != z.size()) {
        throw DomainError("unwound coordinates of size " + std::to_string(value.size()) + ", expected " +
                          std::to_string(z.size()));
    }
    LinearValue reduced = reduce_mod(value, z);
    Int winding = ((value - reduced)[0] / z[0]).floor();
    const std::size_t head_size = z.size() - model.tail().size();
    std::vector<Quad> head(reduced.coords().begin(), reduced.coords().begin() + static_cast<long>(head_size));
    LinearValue tail(std::vector<Quad>(reduced.coords().begin() + static_cast<long>(head_size), reduced.coords().end()));
    // A head equal to z's head carries a negative tail over the base identity, one winding lower.
    if (LinearValue(head) == LinearValue(std::vector<Quad>(z.coords().begin(), z.coords().begin() + static_cast<long>(head_size)))) {
        Element g = model.identity();
        g.tail = tail;
        return {winding, g};
    }
    BaseValue base = std::visit(
        Overloaded{
            [&](const FiniteCyclic&) -> BaseValue {
                if (!head[0].is_rational() || head[0].rat().get_den() != 1) {
                    throw DomainError("non-integral unwound coordinate " + to_string(value));
                }
                return Residue{to_i64(head[0].rat().get_num())};
            },
            [&](const CircleSubgroup& m) -> BaseValue {
                if (m.kind == CircleSubgroup::Kind::Generated) {
                    return Angle(head[0] / z[0]);
                }
                return Angle(head[0]);
            },
            [&](const QCyclic&) -> BaseValue { throw std::logic_error("QCyclic has no unwound descriptor"); },
            [&](const WoundRound&) -> BaseValue { return LinearValue(head); },
        },
        model.base());
    Element g{std::move(base), std::move(tail)};
    model.require(g);
    return {winding, std::move(g)};
}

bool has_p_torsion(const Model& model, std::int64_t p) {
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) { return m.n % p == 0; },
            [&](const CircleSubgroup& m) {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return true;
                }
                return AngleLattice(m.generators).contains(Angle::from_rat(make_rat(Int(1), Int(p))));
            },
            [&](const QCyclic&) { return false; },
            [&](const WoundRound& m) { return m.gamma.contains(m.z.divided(Quad(Rat(p)))); },
        },
        model.base());
}

std::int64_t count_p_classes(const Model& model, std::int64_t p) {
    if (!is_prime(p)) {
        throw UsageError("p-class counts need a prime, got " + std::to_string(p));
    }
    std::int64_t base = std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> std::int64_t { return m.n % p == 0 ? p : 1; },
            [&](const CircleSubgroup& m) -> std::int64_t {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return 1;
                }
                // G = L/ℤ with L free of rank r containing 1; G/pG = L/(pL + ℤ).
                AngleLattice lattice(m.generators);
                std::int64_t rank_classes = lattice.finite_order() ? p : p * p;
                return has_p_torsion(model, p) ? rank_classes : rank_classes / p;
            },
            [&](const QCyclic&) -> std::int64_t { return 1; },
            [&](const WoundRound& m) -> std::int64_t {
                std::int64_t gamma_classes = descriptor_p_classes(m.gamma, p);
                return has_p_torsion(model, p) ? gamma_classes : gamma_classes / p;
            },
        },
        model.base());
    return base * descriptor_p_classes(model.tail(), p);
}

std::int64_t count_unwound_p_classes(const Model& model, std::int64_t p) {
    // z_G is p-divisible in uw(G) exactly when G has an element of order p.
    return count_p_classes(model, p) * (has_p_torsion(model, p) ? 1 : p);
}

std::int64_t count_p_classes_brute(const Model& model, std::int64_t p) {
    auto elements = model.elements();
    std::vector<Element> multiples;
    for (const auto& g : elements) {
        auto pg = model.multiple(g, Int(p));
        if (std::find(multiples.begin(), multiples.end(), pg) == multiples.end()) {
            multiples.push_back(pg);
        }
    }
    return static_cast<std::int64_t>(elements.size() / multiples.size());
}

std::int64_t count_unwound_p_classes_brute(const Model& model, std::int64_t p, std::int64_t window) {
    Unwound uw(model);
    auto elements = model.elements();
    std::vector<UnwoundElement> points;
    for (std::int64_t w = -window; w <= window; ++w) {
        for (const auto& g : elements) {
            points.push_back({Int(w), g});
        }
    }
    std::vector<UnwoundElement> powers;
    const std::int64_t reach = 2 * window + 2;
    for (std::int64_t w = -reach; w <= reach; ++w) {
        for (const auto& g : elements) {
            powers.push_back(uw.power({Int(w), g}, Int(p)));
        }
    }
    auto is_power = [&](const UnwoundElement& x) {
        return std::find(powers.begin(), powers.end(), x) != powers.end();
    };
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool fresh = true;
        for (auto r : representatives) {
            if (is_power(uw.mul(points[i], uw.inverse(points[r])))) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            representatives.push_back(i);
        }
    }
    return static_cast<std::int64_t>(representatives.size());
}

std::optional<UnwoundElement> root_of_z_brute(const Model& model, std::int64_t n) {
    Unwound uw(model);
    for (std::int64_t w = -n; w <= n; ++w) {
        for (const auto& g : model.elements()) {
            UnwoundElement y{Int(w), g};
            if (uw.power(y, Int(n)) == uw.z()) {
                return y;
            }
        }
    }
    return std::nullopt;
}

}  // namespace cog
