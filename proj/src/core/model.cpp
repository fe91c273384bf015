#include "cog/core/model.hpp"

#include <numeric>

#include "cog/error.hpp"
#include "cog/util/overloaded.hpp"

namespace cog {

namespace {

template <class T>
const T& base_as(const BaseValue& value, const char* model_name) {
    const T* ptr = std::get_if<T>(&value);
    if (ptr == nullptr) {
        throw DomainError(std::string("element does not belong to a ") + model_name + " model");
    }
    return *ptr;
}

Int lcm_int(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Int gcd_int(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::string describe_base(const BaseModel& base) {
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) { return "Z/" + std::to_string(m.n); },
            [](const CircleSubgroup& m) -> std::string {
                switch (m.kind) {
                    case CircleSubgroup::Kind::Rational:
                        return "T(U)";
                    case CircleSubgroup::Kind::Quadratic:
                        return "Q(sqrt2)/Z";
                    case CircleSubgroup::Kind::Generated: {
                        std::string out = "<";
                        for (std::size_t i = 0; i < m.generators.size(); ++i) {
                            out += (i ? ", " : "") + to_string(m.generators[i]);
                        }
                        return out + ">";
                    }
                }
                return "circle";
            },
            [](const QCyclic& m) {
                return "Q[theta=" + to_string(m.spec.theta) + ", a=" + to_string(m.spec.a) + "]";
            },
            [](const WoundRound& m) {
                return "(" + m.gamma.describe() + ")/<" + to_string(m.z) + ">";
            },
        },
        base);
}

}  // namespace

std::string to_string(const Element& element) {
    std::string base = std::visit(
        Overloaded{
            [](const Residue& r) { return std::to_string(r.value); },
            [](const Angle& a) { return to_string(a); },
            [](const Rat& q) { return to_string(q); },
            [](const LinearValue& v) { return to_string(v); },
        },
        element.base);
    if (element.tail.empty()) {
        return base;
    }
    return "[" + base + "; " + to_string(element.tail) + "]";
}

LinearValue reduce_mod(const LinearValue& value, const LinearValue& z) {
    Int k = (value[0] / z[0]).floor();
    LinearValue r = value - z.scaled(Quad(Rat(k)));
    while (r.sign() < 0) {
        r += z;
    }
    while (r >= z) {
        r -= z;
    }
    return r;
}

bool lex_rule(bool top12, bool top23, bool top13, bool top_relation, const LinearValue& x1,
              const LinearValue& x2, const LinearValue& x3) {
    if (top12 && top23) {
        return rotation_increasing(x1, x2, x3);
    }
    if (top12) {
        return x1 < x2;
    }
    if (top23) {
        return x2 < x3;
    }
    if (top13) {
        return x3 < x1;
    }
    return top_relation;
}

AngleLattice::AngleLattice(const std::vector<Angle>& generators) {
    scale_ = 1;
    for (const auto& g : generators) {
        scale_ = lcm_int(scale_, g.rat_part().get_den());
        scale_ = lcm_int(scale_, g.irr_part().get_den());
    }
    std::vector<std::pair<Int, Int>> rows;
    rows.emplace_back(scale_, Int(0));
    for (const auto& g : generators) {
        Rat u = g.rat_part() * scale_;
        Rat w = g.irr_part() * scale_;
        rows.emplace_back(u.get_num(), w.get_num());
    }
    // Euclid on the first coordinate until a single row has it nonzero.
    while (true) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].first != 0 &&
                (pivot == rows.size() || abs(rows[i].first) < abs(rows[pivot].first))) {
                pivot = i;
            }
        }
        bool reduced = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot || rows[i].first == 0) {
                continue;
            }
            Int q = rows[i].first / rows[pivot].first;
            rows[i].first -= q * rows[pivot].first;
            rows[i].second -= q * rows[pivot].second;
            reduced = true;
        }
        if (!reduced) {
            first_ = rows[pivot].first;
            shear_ = rows[pivot].second;
            if (first_ < 0) {
                first_ = -first_;
                shear_ = -shear_;
            }
            second_ = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != pivot) {
                    second_ = gcd_int(second_, rows[i].second);
                }
            }
            break;
        }
    }
}

bool AngleLattice::contains(const Angle& angle) const {
    Rat u = angle.rat_part() * scale_;
    Rat w = angle.irr_part() * scale_;
    if (u.get_den() != 1 || w.get_den() != 1) {
        return false;
    }
    if (u.get_num() % first_ != 0) {
        return false;
    }
    Int k = u.get_num() / first_;
    Int rest = w.get_num() - k * shear_;
    if (second_ == 0) {
        return rest == 0;
    }
    return rest % second_ == 0;
}

std::optional<std::int64_t> AngleLattice::finite_order() const {
    if (second_ != 0 || shear_ != 0) {
        return std::nullopt;
    }
    return to_i64(scale_ / first_);
}

std::int64_t AngleLattice::torsion_order() const {
    if (second_ == 0) {
        return shear_ == 0 ? to_i64(scale_ / first_) : 1;
    }
    // Rational elements are the multiples of k0 on the first row.
    Int k0 = second_ / gcd_int(shear_, second_);
    return to_i64(scale_ / (k0 * first_));
}

Model::Model(BaseModel base, LinearDescriptor tail) : base_(std::move(base)), tail_(std::move(tail)) {
    std::visit(Overloaded{
                   [](const FiniteCyclic& m) {
                       if (m.n < 1) {
                           throw ConstructionError("finite cyclic order must be positive");
                       }
                   },
                   [](const CircleSubgroup& m) {
                       if (m.kind != CircleSubgroup::Kind::Generated && !m.generators.empty()) {
                           throw ConstructionError("only generated circle subgroups take generators");
                       }
                   },
                   [](const QCyclic& m) { m.spec.validate(); },
                   [](const WoundRound& m) {
                       if (m.gamma.empty()) {
                           throw ConstructionError("wound-round needs a nontrivial group");
                       }
                       if (!m.gamma.contains(m.z)) {
                           throw ConstructionError("z does not belong to gamma");
                       }
                       if (m.z[0].sign() <= 0) {
                           throw ConstructionError(
                               "z must be positive with nonzero leading coordinate");
                       }
                   },
               },
               base_);
}

Model Model::finite_cyclic(std::int64_t n) { return Model(FiniteCyclic{n}); }

Model Model::rational_circle() { return Model(CircleSubgroup{CircleSubgroup::Kind::Rational, {}}); }

Model Model::quadratic_circle() { return Model(CircleSubgroup{CircleSubgroup::Kind::Quadratic, {}}); }

Model Model::generated_circle(std::vector<Angle> generators) {
    return Model(CircleSubgroup{CircleSubgroup::Kind::Generated, std::move(generators)});
}

Model Model::q_cyclic(QOrderSpec spec) { return Model(QCyclic{std::move(spec)}); }

Model Model::wound_round(LinearDescriptor gamma, LinearValue z) {
    return Model(WoundRound{std::move(gamma), std::move(z)});
}

Model Model::linear(LinearDescriptor group) { return Model(FiniteCyclic{1}, std::move(group)); }

Element Model::from_base(BaseValue base) const {
    return Element{std::move(base), LinearValue::zero(tail_.size())};
}

Element Model::identity() const {
    BaseValue base = std::visit(
        Overloaded{
            [](const FiniteCyclic&) -> BaseValue { return Residue{0}; },
            [](const CircleSubgroup&) -> BaseValue { return Angle(); },
            [](const QCyclic&) -> BaseValue { return Rat(0); },
            [](const WoundRound& m) -> BaseValue { return LinearValue::zero(m.gamma.size()); },
        },
        base_);
    return from_base(std::move(base));
}

Element Model::add(const Element& a, const Element& b) const {
    BaseValue base = std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> BaseValue {
                auto x = base_as<Residue>(a.base, "finite cyclic").value;
                auto y = base_as<Residue>(b.base, "finite cyclic").value;
                return Residue{(x + y) % m.n};
            },
            [&](const CircleSubgroup&) -> BaseValue {
                return base_as<Angle>(a.base, "circle") + base_as<Angle>(b.base, "circle");
            },
            [&](const QCyclic&) -> BaseValue {
                return Rat(base_as<Rat>(a.base, "q_cyclic") + base_as<Rat>(b.base, "q_cyclic"));
            },
            [&](const WoundRound& m) -> BaseValue {
                return reduce_mod(base_as<LinearValue>(a.base, "wound-round") +
                                      base_as<LinearValue>(b.base, "wound-round"),
                                  m.z);
            },
        },
        base_);
    return Element{std::move(base), a.tail + b.tail};
}

Element Model::negate(const Element& a) const {
    BaseValue base = std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> BaseValue {
                auto x = base_as<Residue>(a.base, "finite cyclic").value;
                return Residue{(m.n - x) % m.n};
            },
            [&](const CircleSubgroup&) -> BaseValue { return -base_as<Angle>(a.base, "circle"); },
            [&](const QCyclic&) -> BaseValue { return Rat(-base_as<Rat>(a.base, "q_cyclic")); },
            [&](const WoundRound& m) -> BaseValue {
                return reduce_mod(-base_as<LinearValue>(a.base, "wound-round"), m.z);
            },
        },
        base_);
    return Element{std::move(base), -a.tail};
}

Element Model::multiple(const Element& a, const Int& k) const {
    BaseValue base = std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) -> BaseValue {
                auto x = base_as<Residue>(a.base, "finite cyclic").value;
                Int km = k % Int(static_cast<long>(m.n));
                return Residue{mul_mod(x, to_i64(km), m.n)};
            },
            [&](const CircleSubgroup&) -> BaseValue { return base_as<Angle>(a.base, "circle").times(k); },
            [&](const QCyclic&) -> BaseValue { return Rat(base_as<Rat>(a.base, "q_cyclic") * k); },
            [&](const WoundRound& m) -> BaseValue {
                return reduce_mod(base_as<LinearValue>(a.base, "wound-round").scaled(Quad(Rat(k))), m.z);
            },
        },
        base_);
    return Element{std::move(base), a.tail.scaled(Quad(Rat(k)))};
}

bool Model::base_contains(const BaseValue& value) const {
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic& m) {
                const auto* r = std::get_if<Residue>(&value);
                return r != nullptr && r->value >= 0 && r->value < m.n;
            },
            [&](const CircleSubgroup& m) {
                const auto* angle = std::get_if<Angle>(&value);
                if (angle == nullptr) {
                    return false;
                }
                switch (m.kind) {
                    case CircleSubgroup::Kind::Rational:
                        return angle->is_rational();
                    case CircleSubgroup::Kind::Quadratic:
                        return true;
                    case CircleSubgroup::Kind::Generated:
                        return AngleLattice(m.generators).contains(*angle);
                }
                return false;
            },
            [&](const QCyclic&) { return std::holds_alternative<Rat>(value); },
            [&](const WoundRound& m) {
                const auto* x = std::get_if<LinearValue>(&value);
                return x != nullptr && m.gamma.contains(*x) && x->sign() >= 0 && *x < m.z;
            },
        },
        base_);
}

bool Model::contains(const Element& element) const {
    return base_contains(element.base) && tail_.contains(element.tail);
}

void Model::require(const Element& element) const {
    if (!contains(element)) {
        throw DomainError("element " + to_string(element) + " does not belong to " + describe());
    }
}

bool Model::base_relation(const BaseValue& a, const BaseValue& b, const BaseValue& c) const {
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic&) {
                return rotation_increasing(std::get<Residue>(a).value, std::get<Residue>(b).value,
                                           std::get<Residue>(c).value);
            },
            [&](const CircleSubgroup&) {
                return circle_between(std::get<Angle>(a), std::get<Angle>(b), std::get<Angle>(c));
            },
            [&](const QCyclic& m) {
                auto e1 = embed(m.spec, std::get<Rat>(a));
                auto e2 = embed(m.spec, std::get<Rat>(b));
                auto e3 = embed(m.spec, std::get<Rat>(c));
                bool eq12 = e1.angle == e2.angle;
                bool eq23 = e2.angle == e3.angle;
                bool eq13 = e1.angle == e3.angle;
                bool top = !(eq12 || eq23 || eq13) && circle_between(e1.angle, e2.angle, e3.angle);
                return lex_rule(eq12, eq23, eq13, top, LinearValue({Quad(e1.linear)}),
                                LinearValue({Quad(e2.linear)}), LinearValue({Quad(e3.linear)}));
            },
            [&](const WoundRound&) {
                return rotation_increasing(std::get<LinearValue>(a), std::get<LinearValue>(b),
                                           std::get<LinearValue>(c));
            },
        },
        base_);
}

bool Model::relation(const Element& a, const Element& b, const Element& c) const {
    require(a);
    require(b);
    require(c);
    if (tail_.empty()) {
        return base_relation(a.base, b.base, c.base);
    }
    bool eq12 = a.base == b.base;
    bool eq23 = b.base == c.base;
    bool eq13 = a.base == c.base;
    bool top = !(eq12 || eq23 || eq13) && base_relation(a.base, b.base, c.base);
    return lex_rule(eq12, eq23, eq13, top, a.tail, b.tail, c.tail);
}

std::optional<std::int64_t> Model::finite_order() const {
    if (!tail_.empty()) {
        return std::nullopt;
    }
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) -> std::optional<std::int64_t> { return m.n; },
            [](const CircleSubgroup& m) -> std::optional<std::int64_t> {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return std::nullopt;
                }
                return AngleLattice(m.generators).finite_order();
            },
            [](const QCyclic&) -> std::optional<std::int64_t> { return std::nullopt; },
            [](const WoundRound& m) -> std::optional<std::int64_t> {
                if (m.gamma.size() == 1 && m.gamma[0].kind() == LinearComponent::Kind::Integers) {
                    return to_i64(m.z[0].rat().get_num());
                }
                return std::nullopt;
            },
        },
        base_);
}

std::vector<Element> Model::elements() const {
    auto order = finite_order();
    if (!order) {
        throw UsageError("cannot enumerate the infinite model " + describe());
    }
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(*order));
    for (std::int64_t k = 0; k < *order; ++k) {
        BaseValue base = std::visit(
            Overloaded{
                [&](const FiniteCyclic&) -> BaseValue { return Residue{k}; },
                [&](const CircleSubgroup&) -> BaseValue {
                    return Angle::from_rat(make_rat(Int(static_cast<long>(k)),
                                                    Int(static_cast<long>(*order))));
                },
                [&](const QCyclic&) -> BaseValue { return Rat(0); },
                [&](const WoundRound&) -> BaseValue {
                    return LinearValue({Quad(Rat(static_cast<long>(k)))});
                },
            },
            base_);
        out.push_back(from_base(std::move(base)));
    }
    return out;
}

std::string Model::describe() const {
    std::string base = describe_base(base_);
    if (tail_.empty()) {
        return base;
    }
    return base + " x> " + tail_.describe();
}

}  // namespace cog
