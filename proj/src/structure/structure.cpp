#include "cog/structure/structure.hpp"

#include <algorithm>
#include <set>

#include "cog/core/relation.hpp"
#include "cog/error.hpp"
#include "cog/unwound/unwound.hpp"
#include "cog/util/overloaded.hpp"

namespace cog {

namespace {

enum class Origin { Kernel, Gamma, Tail };

struct PlacedBlock {
    LinearBlock block;
    Origin origin;
    std::size_t index;
};

bool base_is_trivial(const Model& model) {
    if (const auto* m = std::get_if<FiniteCyclic>(&model.base())) {
        return m->n == 1;
    }
    if (const auto* m = std::get_if<CircleSubgroup>(&model.base())) {
        if (m->kind == CircleSubgroup::Kind::Generated) {
            auto order = AngleLattice(m->generators).finite_order();
            return order && *order == 1;
        }
    }
    return false;
}

// Blocks of l(G) with where their coordinates live, most significant first.
std::vector<PlacedBlock> placed_blocks(const Model& model) {
    std::vector<PlacedBlock> out;
    if (const auto* m = std::get_if<QCyclic>(&model.base())) {
        if (m->spec.theta.is_rational()) {
            out.push_back({LinearBlock{KernelBlock{m->spec.family}}, Origin::Kernel, 0});
        }
    } else if (const auto* m = std::get_if<WoundRound>(&model.base())) {
        for (std::size_t i = 1; i < m->gamma.size(); ++i) {
            out.push_back({LinearBlock{m->gamma[i]}, Origin::Gamma, i});
        }
    }
    for (std::size_t i = 0; i < model.tail().size(); ++i) {
        out.push_back({LinearBlock{model.tail()[i]}, Origin::Tail, i});
    }
    return out;
}

// Coordinates of an element of l(G) in each block.
std::vector<Quad> block_coordinates(const Model& model, const Element& g) {
    std::vector<Quad> coords;
    if (const auto* m = std::get_if<QCyclic>(&model.base())) {
        if (m->spec.theta.is_rational()) {
            coords.emplace_back(std::get<Rat>(g.base));
        }
    } else if (const auto* m = std::get_if<WoundRound>(&model.base())) {
        // x ≡ x − k·z with k = x₀/z₀ ∈ {0, 1} when U(g) = 0.
        const auto& x = std::get<LinearValue>(g.base);
        Quad k = x[0] / m->z[0];
        LinearValue y = x - m->z.scaled(k);
        for (std::size_t i = 1; i < y.size(); ++i) {
            coords.push_back(y[i]);
        }
    }
    for (const auto& c : g.tail.coords()) {
        coords.push_back(c);
    }
    return coords;
}

std::int64_t kernel_n0(const FFamily& family) {
    std::int64_t n0 = 1;
    for (const auto& [p, digits] : family.explicit_digits()) {
        n0 *= ipow(p, family.leading_zero_run(p));
    }
    return n0;
}

Element block_unit(const Model& model, const PlacedBlock& placed) {
    switch (placed.origin) {
        case Origin::Kernel: {
            const auto& family = std::get<KernelBlock>(placed.block.source).family;
            return model.from_base(make_rat(Int(1), Int(kernel_n0(family))));
        }
        case Origin::Gamma: {
            const auto& wound = std::get<WoundRound>(model.base());
            return model.from_base(LinearValue::unit(wound.gamma.size(), placed.index));
        }
        case Origin::Tail: {
            Element out = model.identity();
            out.tail = LinearValue::unit(model.tail().size(), placed.index);
            return out;
        }
    }
    throw DomainError("unknown block");
}

// G/l(G) is finite (and then cyclic, with the returned unit angle).
std::optional<Element> top_quotient_unit(const Model& model) {
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> std::optional<Element> {
                if (m.n == 1) {
                    return std::nullopt;
                }
                return model.from_base(Residue{1});
            },
            [&](const CircleSubgroup& m) -> std::optional<Element> {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return std::nullopt;
                }
                auto order = AngleLattice(m.generators).finite_order();
                if (!order || *order == 1) {
                    return std::nullopt;
                }
                return model.from_base(Angle::from_rat(make_rat(Int(1), Int(*order))));
            },
            [&](const QCyclic&) -> std::optional<Element> { return std::nullopt; },
            [&](const WoundRound& m) -> std::optional<Element> {
                if (m.gamma[0].kind() != LinearComponent::Kind::Integers || m.z[0] == Quad(Rat(1))) {
                    return std::nullopt;
                }
                return model.from_base(LinearValue::unit(m.gamma.size(), 0));
            },
        },
        model.base());
}

void require_torsion_free_nonlinear(const Model& model, const char* what) {
    if (is_linear(model)) {
        throw UnsupportedError(std::string(what) + " needs a nonlinear model");
    }
    if (has_torsion(model)) {
        throw UnsupportedError(std::string(what) + " needs a torsion-free model");
    }
}

void add_prime_factors(const Rat& value, std::set<std::int64_t>& primes) {
    for (const Int* part : {&value.get_num(), &value.get_den()}) {
        Int magnitude = abs(*part);
        if (magnitude > 1) {
            for (auto [p, e] : factorize(to_i64(magnitude))) {
                primes.insert(p);
            }
        }
    }
}

// Primes where wound-round divisibility or torsion can differ from the generic behaviour.
std::set<std::int64_t> special_primes(const WoundRound& m) {
    std::set<std::int64_t> primes;
    for (std::size_t i = 0; i < m.gamma.size(); ++i) {
        for (auto p : m.gamma[i].primes()) {
            primes.insert(p);
        }
        if (m.z[i].is_rational()) {
            add_prime_factors(m.z[i].rat(), primes);
        }
    }
    return primes;
}

std::int64_t generic_prime(const std::set<std::int64_t>& avoid) {
    std::int64_t p = 2;
    while (avoid.count(p) != 0) {
        do {
            ++p;
        } while (!is_prime(p));
    }
    return p;
}

bool chain_up_to(const Model& model, const Element& g, std::int64_t k) {
    std::vector<Element> multiples{model.identity()};
    for (std::int64_t i = 1; i <= k; ++i) {
        multiples.push_back(model.add(multiples.back(), g));
    }
    if (multiples.size() < 3) {
        return multiples[0] != multiples[1];
    }
    return eval_R_chain(model, multiples);
}

}  // namespace

bool is_positive(const Model& model, const Element& g) {
    const Element e = model.identity();
    return g == e || model.relation(e, g, model.add(g, g));
}

bool is_linear(const Model& model) {
    if (base_is_trivial(model)) {
        return true;
    }
    if (const auto* m = std::get_if<QCyclic>(&model.base())) {
        return m->spec.theta.is_rational() && m->spec.family.all_zero();
    }
    if (const auto* m = std::get_if<WoundRound>(&model.base())) {
        return m->gamma[0].kind() == LinearComponent::Kind::Integers && m->z[0] == Quad(Rat(1));
    }
    return false;
}

bool LinearBlock::divisible_by(std::int64_t p) const {
    return std::visit(Overloaded{
                          [&](const LinearComponent& c) { return c.divisible_by(p); },
                          [&](const KernelBlock& k) { return k.family.is_zero_map(p); },
                      },
                      source);
}

bool LinearBlock::is_discrete() const {
    return std::visit(Overloaded{
                          [](const LinearComponent& c) { return c.is_discrete(); },
                          [](const KernelBlock& k) { return k.family.has_discrete_criterion(); },
                      },
                      source);
}

std::string LinearBlock::describe() const {
    return std::visit(Overloaded{
                          [](const LinearComponent& c) { return c.describe(); },
                          [](const KernelBlock&) { return std::string("ker(angle)"); },
                      },
                      source);
}

std::string LinearPartView::describe() const {
    if (kind == Kind::Trivial) {
        return "{0}";
    }
    std::string out = kind == Kind::WholeGroup ? "G = " : "";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        out += (i ? " x> " : "") + blocks[i].describe();
    }
    return out;
}

LinearPartView linear_part(const Model& model) {
    LinearPartView view;
    for (auto& placed : placed_blocks(model)) {
        view.blocks.push_back(std::move(placed.block));
    }
    if (is_linear(model)) {
        view.kind = LinearPartView::Kind::WholeGroup;
    } else {
        view.kind = view.blocks.empty() ? LinearPartView::Kind::Trivial : LinearPartView::Kind::Blocks;
    }
    return view;
}

bool in_linear_part(const Model& model, const Element& g) {
    model.require(g);
    if (is_linear(model)) {
        return true;
    }
    return U_of(model, g).is_zero();
}

Angle U_of(const Model& model, const Element& g) {
    model.require(g);
    if (is_linear(model)) {
        return Angle();
    }
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) {
                return Angle::from_rat(make_rat(Int(std::get<Residue>(g.base).value), Int(m.n)));
            },
            [&](const CircleSubgroup&) { return std::get<Angle>(g.base); },
            [&](const QCyclic& m) { return embed(m.spec, std::get<Rat>(g.base)).angle; },
            [&](const WoundRound& m) { return Angle(std::get<LinearValue>(g.base)[0] / m.z[0]); },
        },
        model.base());
}

Discreteness is_discrete(const Model& model) {
    if (auto order = model.finite_order()) {
        if (*order == 1) {
            return {};
        }
        return {true, model.elements()[1]};
    }
    auto blocks = placed_blocks(model);
    if (blocks.empty() || !blocks.back().block.is_discrete()) {
        return {};
    }
    return {true, block_unit(model, blocks.back())};
}

std::optional<Int> torsion_order(const Model& model, const Element& g) {
    model.require(g);
    if (!g.tail.is_zero()) {
        return std::nullopt;
    }
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> std::optional<Int> {
                return Int(m.n / gcd64(std::get<Residue>(g.base).value, m.n));
            },
            [&](const CircleSubgroup&) -> std::optional<Int> {
                const auto& angle = std::get<Angle>(g.base);
                if (!angle.is_rational()) {
                    return std::nullopt;
                }
                return Int(angle.rat_part().get_den());
            },
            [&](const QCyclic&) -> std::optional<Int> {
                if (std::get<Rat>(g.base) == 0) {
                    return Int(1);
                }
                return std::nullopt;
            },
            [&](const WoundRound& m) -> std::optional<Int> {
                const auto& x = std::get<LinearValue>(g.base);
                Quad ratio = x[0] / m.z[0];
                if (!ratio.is_rational() || m.z.scaled(ratio) != x) {
                    return std::nullopt;
                }
                return Int(ratio.rat().get_den());
            },
        },
        model.base());
}

bool has_torsion(const Model& model) {
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) { return m.n > 1; },
            [](const CircleSubgroup& m) {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return true;
                }
                return AngleLattice(m.generators).torsion_order() > 1;
            },
            [](const QCyclic&) { return false; },
            [&](const WoundRound& m) {
                // A prime p gives torsion iff z/p ∈ Γ; components ℤ and ℤ[1/S] allow only finitely many.
                for (std::size_t i = 0; i < m.gamma.size(); ++i) {
                    auto kind = m.gamma[i].kind();
                    if (m.z[i].is_zero() ||
                        (kind != LinearComponent::Kind::Integers && kind != LinearComponent::Kind::Localized)) {
                        continue;
                    }
                    std::set<std::int64_t> candidates(m.gamma[i].primes().begin(), m.gamma[i].primes().end());
                    add_prime_factors(m.z[i].rat(), candidates);
                    return std::any_of(candidates.begin(), candidates.end(),
                                       [&](std::int64_t p) { return has_p_torsion(model, p); });
                }
                return true;
            },
        },
        model.base());
}

bool is_p_divisible(const Model& model, std::int64_t p) { return count_p_classes(model, p) == 1; }

bool is_divisible(const Model& model) {
    if (!model.tail().is_divisible()) {
        return false;
    }
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) { return m.n == 1; },
            [](const CircleSubgroup& m) {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return true;
                }
                // A nontrivial finitely generated group is never divisible.
                auto order = AngleLattice(m.generators).finite_order();
                return order && *order == 1;
            },
            [](const QCyclic&) { return true; },
            [&](const WoundRound& m) {
                auto primes = special_primes(m);
                primes.insert(generic_prime(primes));
                return std::all_of(primes.begin(), primes.end(),
                                   [&](std::int64_t p) { return is_p_divisible(model, p); });
            },
        },
        model.base());
}

std::string to_string(HpLevel::Kind kind) {
    switch (kind) {
        case HpLevel::Kind::Zero:
            return "zero";
        case HpLevel::Kind::TailIndex:
            return "tail";
        case HpLevel::Kind::FullLinearPart:
            return "full";
    }
    return "?";
}

HpLevel H_p_level(const Model& model, std::int64_t p) {
    if (!is_prime(p)) {
        throw UsageError("H_p needs a prime, got " + std::to_string(p));
    }
    require_torsion_free_nonlinear(model, "H_p");
    auto view = linear_part(model);
    std::size_t depth = 0;
    while (depth < view.blocks.size() && view.blocks[view.blocks.size() - 1 - depth].divisible_by(p)) {
        ++depth;
    }
    HpLevel level;
    level.prime = p;
    level.depth = depth;
    level.blocks = view.blocks.size();
    if (depth == 0) {
        level.kind = HpLevel::Kind::Zero;
    } else if (depth == view.blocks.size()) {
        level.kind = HpLevel::Kind::FullLinearPart;
    } else {
        level.kind = HpLevel::Kind::TailIndex;
    }
    return level;
}

bool in_H_p(const Model& model, const HpLevel& level, const Element& g) {
    if (!in_linear_part(model, g)) {
        return false;
    }
    auto coords = block_coordinates(model, g);
    for (std::size_t i = 0; i + level.depth < coords.size(); ++i) {
        if (!coords[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool quotient_is_discrete(const Model& model, const HpLevel& level) {
    auto blocks = placed_blocks(model);
    if (level.depth < blocks.size()) {
        return blocks[blocks.size() - level.depth - 1].block.is_discrete();
    }
    return top_quotient_unit(model).has_value();
}

Element quotient_unit(const Model& model, const HpLevel& level) {
    auto blocks = placed_blocks(model);
    if (level.depth < blocks.size()) {
        const auto& placed = blocks[blocks.size() - level.depth - 1];
        if (!placed.block.is_discrete()) {
            throw DomainError("G/H_" + std::to_string(level.prime) + " is dense");
        }
        return block_unit(model, placed);
    }
    auto unit = top_quotient_unit(model);
    if (!unit) {
        throw DomainError("G/H_" + std::to_string(level.prime) + " is dense");
    }
    return *unit;
}

std::optional<Element> divide(const Model& model, const Element& g, const Int& n) {
    model.require(g);
    if (n < 1) {
        throw UsageError("division needs a positive integer");
    }
    Quad divisor{Rat(n)};
    Element out{g.base, g.tail.divided(divisor)};
    if (!model.tail().contains(out.tail)) {
        return std::nullopt;
    }
    auto try_bases = [&](auto candidate_for) -> std::optional<Element> {
        for (Int k = 0; k < n; ++k) {
            if (auto base = candidate_for(k)) {
                out.base = *base;
                if (model.contains(out) && model.multiple(out, n) == g) {
                    return out;
                }
            }
        }
        return std::nullopt;
    };
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) {
                return try_bases([&](const Int& k) -> std::optional<BaseValue> {
                    Int r = Int(std::get<Residue>(g.base).value) + k * Int(m.n);
                    if (r % n != 0) {
                        return std::nullopt;
                    }
                    return Residue{to_i64(r / n)};
                });
            },
            [&](const CircleSubgroup&) {
                return try_bases([&](const Int& k) -> std::optional<BaseValue> {
                    return Angle((std::get<Angle>(g.base).turns() + Quad(Rat(k))) / divisor);
                });
            },
            [&](const QCyclic&) -> std::optional<Element> {
                out.base = Rat(std::get<Rat>(g.base) / n);
                return out;
            },
            [&](const WoundRound& m) {
                return try_bases([&](const Int& k) -> std::optional<BaseValue> {
                    LinearValue y = (std::get<LinearValue>(g.base) + m.z.scaled(Quad(Rat(k)))).divided(divisor);
                    if (!m.gamma.contains(y)) {
                        return std::nullopt;
                    }
                    return y;
                });
            },
        },
        model.base());
}

bool argbound(const Model& model, const Element& g, std::int64_t n) {
    if (n < 1) {
        throw UsageError("argbound needs n >= 1");
    }
    model.require(g);
    return chain_up_to(model, g, n) && !chain_up_to(model, g, n + 1);
}

bool argbound_semantic(const Model& model, const Element& g, std::int64_t n) {
    if (n < 1) {
        throw UsageError("argbound needs n >= 1");
    }
    const Element e = model.identity();
    const Quad t = U_of(model, g).turns();
    const Quad lower(make_rat(Int(1), Int(n + 1)));
    const Angle upper = Angle::from_rat(make_rat(Int(1), Int(n)));
    // With torsion (n+1)g may be e, which also stops the chain.
    if (t == lower) {
        return is_positive(model, model.multiple(g, Int(n + 1)));
    }
    if (t > lower && (n == 1 || t < upper.turns())) {
        return true;
    }
    if (Angle(t) == upper) {
        Element ng = model.multiple(g, Int(n));
        return ng != e && !is_positive(model, ng);
    }
    return false;
}

std::vector<Element> c_convex_component(const Model& model, const std::vector<Element>& subset,
                                        const Element& h) {
    auto elements = model.elements();
    auto in_subset = [&](const Element& g) { return std::find(subset.begin(), subset.end(), g) != subset.end(); };
    if (!in_subset(h)) {
        throw PreconditionError("h does not belong to the subset");
    }
    const std::size_t n = elements.size();
    if (std::all_of(elements.begin(), elements.end(), in_subset)) {
        return elements;
    }
    std::size_t at = static_cast<std::size_t>(std::find(elements.begin(), elements.end(), h) - elements.begin());
    std::size_t start = at;
    while (in_subset(elements[(start + n - 1) % n])) {
        start = (start + n - 1) % n;
    }
    std::vector<Element> arc;
    for (std::size_t i = start; in_subset(elements[i % n]); ++i) {
        arc.push_back(elements[i % n]);
    }
    return arc;
}

bool is_c_convex(const Model& model, const std::vector<Element>& subset) {
    if (subset.size() <= 1) {
        return true;
    }
    auto elements = model.elements();
    auto in_subset = [&](const Element& g) { return std::find(subset.begin(), subset.end(), g) != subset.end(); };
    auto arc_inside = [&](const Element& from, const Element& to) {
        return std::all_of(elements.begin(), elements.end(),
                           [&](const Element& x) { return !model.relation(from, x, to) || in_subset(x); });
    };
    for (const auto& g : subset) {
        for (const auto& h : subset) {
            if (g != h && !arc_inside(g, h) && !arc_inside(h, g)) {
                return false;
            }
        }
    }
    return true;
}

bool divisible_in_short_arc(const Model& model, const Element& g, std::int64_t p) {
    auto h = divide(model, g, Int(p));
    if (!h) {
        return false;
    }
    const Element e = model.identity();
    const Element minus_g = model.negate(g);
    // Chains are strict, so coincidences make both readings false.
    return eval_R_chain(model, {e, *h, g, minus_g}) || eval_R_chain(model, {minus_g, g, *h, e});
}

std::optional<Element> witness_in_interval(const Model& model, std::int64_t p, bool want_divisible,
                                           const Angle& from, const Angle& to, std::int64_t height) {
    if (from == to) {
        return std::nullopt;
    }
    if (!std::holds_alternative<QCyclic>(model.base())) {
        throw UnsupportedError("interval witnesses are searched on orders of Q only");
    }
    for (std::int64_t den = 1; den <= height; ++den) {
        for (std::int64_t num = -height; num <= height; ++num) {
            if (gcd64(num, den) != 1) {
                continue;
            }
            Element g = model.from_base(make_rat(Int(num), Int(den)));
            if (!circle_between(from, U_of(model, g), to)) {
                continue;
            }
            if (divisible_in_short_arc(model, g, p) == want_divisible) {
                return g;
            }
        }
    }
    return std::nullopt;
}

}  // namespace cog
