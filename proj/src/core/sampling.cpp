#include "cog/core/sampling.hpp"

#include "cog/error.hpp"

namespace cog {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) {
        throw UsageError("empty sampling range");
    }
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

Rat sample_rat(Rng& rng, std::int64_t height) {
    auto num = rng.uniform(-height, height);
    auto den = rng.uniform(1, height);
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

Quad sample_component_value(const LinearComponent& component, Rng& rng, std::int64_t height) {
    if (rng.chance(1, 6)) {
        return Quad();
    }
    switch (component.kind()) {
        case LinearComponent::Kind::Rationals:
            return Quad(sample_rat(rng, height));
        case LinearComponent::Kind::Integers:
            return Quad(Rat(static_cast<long>(rng.uniform(-height, height))));
        case LinearComponent::Kind::QuadraticField:
            if (rng.chance(1, 4)) {
                return Quad(sample_rat(rng, height));
            }
            return Quad(sample_rat(rng, height), sample_rat(rng, height));
        case LinearComponent::Kind::Localized: {
            Int den = 1;
            for (auto p : component.primes()) {
                for (auto e = rng.uniform(0, 2); e > 0; --e) {
                    den *= Int(static_cast<long>(p));
                }
            }
            return Quad(make_rat(Int(static_cast<long>(rng.uniform(-height, height))), den));
        }
        case LinearComponent::Kind::CoLocalized: {
            Int den(static_cast<long>(rng.uniform(1, height)));
            for (auto p : component.primes()) {
                Int prime(static_cast<long>(p));
                while (den % prime == 0) {
                    den /= prime;
                }
            }
            return Quad(make_rat(Int(static_cast<long>(rng.uniform(-height, height))), den));
        }
    }
    return Quad();
}

LinearValue sample_linear_value(const LinearDescriptor& group, Rng& rng, std::int64_t height) {
    std::vector<Quad> coords;
    coords.reserve(group.size());
    for (const auto& component : group.components()) {
        coords.push_back(sample_component_value(component, rng, height));
    }
    return LinearValue(std::move(coords));
}

namespace {

BaseValue sample_base(const BaseModel& base, Rng& rng, std::int64_t height) {
    if (const auto* m = std::get_if<FiniteCyclic>(&base)) {
        return Residue{rng.uniform(0, m->n - 1)};
    }
    if (const auto* m = std::get_if<CircleSubgroup>(&base)) {
        switch (m->kind) {
            case CircleSubgroup::Kind::Rational: {
                auto den = rng.uniform(1, height);
                auto num = rng.uniform(0, den - 1);
                return Angle::from_rat(make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den))));
            }
            case CircleSubgroup::Kind::Quadratic: {
                Rat rat = sample_rat(rng, height);
                Rat irr = rng.chance(1, 4) ? Rat(0) : sample_rat(rng, height);
                return Angle(Quad(rat, irr));
            }
            case CircleSubgroup::Kind::Generated: {
                Angle sum;
                for (const auto& g : m->generators) {
                    sum = sum + g.times(Int(static_cast<long>(rng.uniform(-height, height))));
                }
                return sum;
            }
        }
    }
    if (std::holds_alternative<QCyclic>(base)) {
        return sample_rat(rng, height);
    }
    const auto& wound = std::get<WoundRound>(base);
    return reduce_mod(sample_linear_value(wound.gamma, rng, height), wound.z);
}

}  // namespace

Element sample_element(const Model& model, Rng& rng, std::int64_t height) {
    Element out{sample_base(model.base(), rng, height), sample_linear_value(model.tail(), rng, height)};
    return out;
}

}  // namespace cog
