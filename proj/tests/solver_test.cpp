#include <functional>

#include "cog/core/relation.hpp"
#include "cog/core/sampling.hpp"
#include "cog/error.hpp"
#include "cog/solver/solver.hpp"
#include "cog/unwound/unwound.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cog;
using namespace cog::testing;

namespace {

const Model circle = Model::rational_circle();

Element turn(long num, long den) { return angle(q(num, den)); }

Element turn_tail(long num, long den, long tail) {
    return Element{Angle::from_rat(q(num, den)), lin({q(tail)})};
}

// Cyclic order on ℤ/N by integer comparison of residues.
bool integer_R(long a, long b, long c) { return rotation_increasing(a, b, c); }

long mod(long value, long n) { return ((value % n) + n) % n; }

struct FormulaGen {
    const Model& model;
    Rng& rng;
    std::function<Element()> coefficient;

    std::int64_t exponent() { return rng.uniform(-4, 4); }

    AtomicFormula atom() {
        if (rng.chance(1, 4)) {
            return EqAtom{coefficient(), exponent(), coefficient()};
        }
        return RelAtom{coefficient(), exponent(), coefficient(), exponent(), coefficient(), exponent()};
    }

    Formula formula(int depth) {
        if (depth == 0 || rng.chance(1, 3)) {
            return Formula::of(atom());
        }
        switch (rng.uniform(0, 2)) {
            case 0:
                return Formula::negation(formula(depth - 1));
            case 1:
                return Formula::conjunction(formula(depth - 1), formula(depth - 1));
            default:
                return Formula::disjunction(formula(depth - 1), formula(depth - 1));
        }
    }
};

// Breakpoints, arc midpoints and near neighbours of every solution point: the places where an
// error in an endpoint formula would show.
std::vector<Element> boundary_probes(const Model& model, const IntervalUnion& solution) {
    const LinearValue z = to_unwound_coordinates(model, {Int(1), model.identity()});
    std::vector<LinearValue> positions;
    for (const auto& g : solution.singletons()) {
        positions.push_back(solution.lift(g));
    }
    for (const auto& arc : solution.arcs()) {
        LinearValue from = solution.lift(arc.from);
        LinearValue to = solution.lift(arc.to);
        if (!(from < to)) {
            to += z;
        }
        positions.push_back(from);
        positions.push_back(to);
        positions.push_back((from + to).divided(Quad(Rat(2))));
    }
    std::vector<Element> out;
    const LinearValue nudge = z.divided(Quad(Rat(1000003)));
    for (const auto& position : positions) {
        for (const auto& shifted : {position, position + nudge, position - nudge}) {
            out.push_back(from_unwound_coordinates(model, shifted).g);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("formula parsing") {
    Bindings bindings{{"a", turn(1, 10)}, {"b", turn(2, 5)}, {"c", turn(1, 3)}};
    Formula power = parse_formula(circle, "R(a, x^2, b)", bindings);
    REQUIRE(power.kind == Formula::Kind::Atom);
    CHECK(std::get<RelAtom>(power.atom[0]) == RelAtom{turn(1, 10), 0, circle.identity(), 2, turn(2, 5), 0});

    Formula roots = parse_formula(circle, "a*x^3 = b", bindings);
    CHECK(std::get<EqAtom>(roots.atom[0]) == EqAtom{turn(1, 10), 3, turn(2, 5)});

    Formula both = parse_formula(circle, "R(a*x^2, b*x, c) & !(x = e)", bindings);
    REQUIRE(both.kind == Formula::Kind::And);
    CHECK(std::get<RelAtom>(both.children[0].atom[0]) == RelAtom{turn(1, 10), 2, turn(2, 5), 1, turn(1, 3), 0});
    REQUIRE(both.children[1].kind == Formula::Kind::Not);
    CHECK(std::get<EqAtom>(both.children[1].children[0].atom[0]) == EqAtom{circle.identity(), 1, circle.identity()});

    // Products, powers of coefficients, negative exponents, precedence.
    Formula mixed = parse_formula(circle, "x^-2*a^2*x = b*x^(3) | a = b & c = c", bindings);
    REQUIRE(mixed.kind == Formula::Kind::Or);
    CHECK(std::get<EqAtom>(mixed.children[0].atom[0]) == EqAtom{turn(1, 5), -4, turn(2, 5)});
    CHECK(mixed.children[1].kind == Formula::Kind::And);

    auto error_at = [&](const std::string& text) -> std::size_t {
        try {
            parse_formula(circle, text, bindings);
        } catch (const ParseError& error) {
            return error.position();
        }
        return std::string::npos;
    };
    CHECK(error_at("R(a, x^2, d)") == 10);
    CHECK(error_at("R(a, x^2 b)") == 9);
    CHECK(error_at("a*x = ") == 6);
    CHECK(error_at("(a = b") == 6);
    CHECK(error_at("a = b)") == 5);
    CHECK(error_at("x^ = a") == 3);
    CHECK_THROWS_AS(parse_formula(circle, "a = b", {{"a", residue(1)}}), DomainError);
}

TEST_CASE("normal forms") {
    const Element a = turn(1, 10);
    const Element b = turn(1, 5);
    const Element c = turn(2, 3);
    auto form = [&](const AtomicFormula& atom) { return normalize(circle, atom); };

    auto triple = form(RelAtom{a, 2, b, 2, c, 2});
    CHECK(std::holds_alternative<TripleConst>(triple.form));

    auto power = form(RelAtom{a, 1, b, 1, c, 3});
    REQUIRE(std::holds_alternative<RPower>(power.form));
    const auto& rpower = std::get<RPower>(power.form);
    CHECK(rpower.a == circle.subtract(b, c));
    CHECK(rpower.n == 2);
    CHECK(rpower.b == circle.subtract(a, c));
    CHECK_FALSE(power.inverted);

    // Least exponent c·x first: R(c·x, a·x², b·x³) ⇔ R(c·a⁻¹, x, b·a⁻¹·x²), then inverted since 1 < 2.
    auto mixed = form(RelAtom{a, 2, b, 3, c, 1});
    REQUIRE(std::holds_alternative<RMixed>(mixed.form));
    const auto& rmixed = std::get<RMixed>(mixed.form);
    CHECK(mixed.inverted);
    CHECK(rmixed.m == 2);
    CHECK(rmixed.n == 1);
    CHECK(rmixed.a == circle.subtract(b, c));
    CHECK(rmixed.b == circle.subtract(b, a));

    auto negative = form(RelAtom{a, 0, circle.identity(), -3, b, 0});
    REQUIRE(std::holds_alternative<RPower>(negative.form));
    CHECK(negative.inverted);
    CHECK(std::get<RPower>(negative.form).n == 3);
    CHECK(std::get<RPower>(negative.form).a == a);

    CHECK(std::holds_alternative<ConstEq>(form(EqAtom{a, 0, b}).form));
    auto roots = form(EqAtom{a, -2, b});
    CHECK(std::holds_alternative<Roots>(roots.form));
    CHECK(roots.inverted);

    // Each normal form, solved and inverted back when flagged, agrees with the atom on a grid.
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto coefficient = [&] { return turn(rng.uniform(0, 11), 12); };
        RelAtom atom{coefficient(), rng.uniform(-3, 3), coefficient(), rng.uniform(-3, 3),
                     coefficient(), rng.uniform(-3, 3)};
        IntervalUnion solution = solve(circle, AtomicFormula(atom));
        Formula formula = Formula::of(atom);
        auto report = verify_solution(circle, formula, solution, VerifyMode::exhaustive(oracle_modulus(circle, formula)));
        CAPTURE(to_string(formula));
        CAPTURE(solution.describe());
        REQUIRE(report.ok());
    }
}

TEST_CASE("interval unions") {
    const Element e = circle.identity();
    auto full_minus_e = IntervalUnion::singleton(circle, e).complement();
    CHECK(full_minus_e.singletons().empty());
    REQUIRE(full_minus_e.arcs().size() == 1);
    CHECK(full_minus_e.arcs()[0] == Arc{e, e});
    CHECK(full_minus_e == IntervalUnion::arc(circle, e, e));
    CHECK_FALSE(full_minus_e.contains(e));
    CHECK(full_minus_e.contains(turn(1, 2)));

    // Adjacent arcs and their shared endpoint merge into one arc.
    auto merged = IntervalUnion::arc(circle, turn(1, 10), turn(3, 10))
                      .unite(IntervalUnion::arc(circle, turn(3, 10), turn(1, 2)))
                      .unite(IntervalUnion::singleton(circle, turn(3, 10)));
    CHECK(merged == IntervalUnion::arc(circle, turn(1, 10), turn(1, 2)));
    CHECK(merged.arcs().size() == 1);

    // An arc across e keeps e inside.
    auto across = IntervalUnion::arc(circle, turn(9, 10), turn(1, 10));
    CHECK(across.contains(e));
    CHECK(across.arcs() == std::vector<Arc>{{turn(9, 10), turn(1, 10)}});
    CHECK(across.inverted() == across);
    CHECK(IntervalUnion::arc(circle, turn(1, 10), turn(3, 10)).inverted() ==
          IntervalUnion::arc(circle, turn(7, 10), turn(9, 10)));

    CHECK(IntervalUnion::full(circle).complement().is_empty());
    CHECK(IntervalUnion::empty(circle).unite(IntervalUnion::full(circle)).is_full());
    CHECK(IntervalUnion::arc(circle, turn(1, 3), turn(2, 3))
              .unite(IntervalUnion::arc(circle, turn(2, 3), turn(1, 3)))
              .unite(IntervalUnion::singleton(circle, turn(1, 3)))
              .unite(IntervalUnion::singleton(circle, turn(2, 3)))
              .is_full());
    CHECK_THROWS_AS(IntervalUnion::full(Model::q_cyclic(arch_spec(q(1, 3)))), UnsupportedError);
}

TEST_CASE("interval union boolean algebra") {
    // Random unions over 24ths of a turn, checked pointwise on 48ths and for canonical equality.
    Rng rng(23);
    auto random_union = [&] {
        IntervalUnion out = IntervalUnion::empty(circle);
        for (long pieces = rng.uniform(0, 4); pieces > 0; --pieces) {
            Element from = turn(rng.uniform(0, 23), 24);
            if (rng.chance(1, 3)) {
                out = out.unite(IntervalUnion::singleton(circle, from));
            } else {
                out = out.unite(IntervalUnion::arc(circle, from, turn(rng.uniform(0, 23), 24)));
            }
        }
        return rng.chance(1, 4) ? out.complement() : out;
    };
    const auto grid = oracle_grid(circle, 48);
    for (int i = 0; i < 1000; ++i) {
        IntervalUnion s = random_union();
        IntervalUnion t = random_union();
        IntervalUnion u = random_union();
        for (const auto& x : grid) {
            const Element inverse = circle.negate(x);
            REQUIRE(s.unite(t).contains(x) == (s.contains(x) || t.contains(x)));
            REQUIRE(s.intersect(t).contains(x) == (s.contains(x) && t.contains(x)));
            REQUIRE(s.complement().contains(x) == !s.contains(x));
            REQUIRE(s.inverted().contains(x) == s.contains(inverse));
        }
        REQUIRE(s.unite(t).complement() == s.complement().intersect(t.complement()));
        REQUIRE(s.intersect(t.unite(u)) == s.intersect(t).unite(s.intersect(u)));
        REQUIRE(s.unite(s) == s);
        REQUIRE(s.complement().complement() == s);
        REQUIRE(s.inverted().inverted() == s);
        REQUIRE(s.unite(s.complement()).is_full());
        // Rebuilding from the printed form gives the same canonical value.
        IntervalUnion rebuilt = s.is_full() ? IntervalUnion::full(circle) : IntervalUnion::empty(circle);
        for (const auto& g : s.singletons()) {
            rebuilt = rebuilt.unite(IntervalUnion::singleton(circle, g));
        }
        for (const auto& arc : s.arcs()) {
            rebuilt = rebuilt.unite(IntervalUnion::arc(circle, arc.from, arc.to));
        }
        REQUIRE(rebuilt == s);
    }
}

TEST_CASE("R(a, x^n, b)") {
    auto two = solve_R_power(circle, turn(1, 10), 2, turn(2, 5));
    CHECK(two.arcs() == std::vector<Arc>{{turn(1, 20), turn(1, 5)}, {turn(11, 20), turn(7, 10)}});
    CHECK(two.singletons().empty());
    // Over ℤ/20 the solutions are exactly 2, 3, 12, 13.
    for (long k = 0; k < 20; ++k) {
        bool expected = k == 2 || k == 3 || k == 12 || k == 13;
        CHECK(two.contains(turn(k, 20)) == expected);
    }
    auto direct = Formula::of(RelAtom{turn(1, 10), 0, circle.identity(), 2, turn(2, 5), 0});
    CHECK(verify_solution(circle, direct, two, VerifyMode::exhaustive(40)).ok());

    CHECK(solve_R_power(circle, turn(1, 10), 1, turn(2, 5)) == IntervalUnion::arc(circle, turn(1, 10), turn(2, 5)));
    CHECK(solve_R_power(circle, turn(1, 10), 3, turn(1, 10)).is_empty());

    // b′ < a′: the arc passes e and each branch ends one root of unity further on.
    auto wrapped = solve_R_power(circle, turn(3, 4), 2, turn(1, 4));
    CHECK(wrapped.arcs() == std::vector<Arc>{{turn(3, 8), turn(5, 8)}, {turn(7, 8), turn(1, 8)}});

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Element a = turn(rng.uniform(0, 59), 60);
        Element b = turn(rng.uniform(0, 59), 60);
        std::int64_t n = rng.uniform(1, 6);
        auto solution = solve_R_power(circle, a, n, b);
        if (a == b) {
            CHECK(solution.is_empty());
            continue;
        }
        CHECK(solution.arcs().size() == static_cast<std::size_t>(n));
        auto formula = Formula::of(RelAtom{a, 0, circle.identity(), n, b, 0});
        CHECK(verify_solution(circle, formula, solution, VerifyMode::exhaustive(oracle_modulus(circle, formula))).ok());
    }

    // Negative exponent through inversion.
    auto inverse = solve(circle, AtomicFormula(RelAtom{turn(1, 10), 0, circle.identity(), -2, turn(2, 5), 0}));
    CHECK(inverse == two.inverted());

    CHECK_THROWS_AS(solve_R_power(Model::q_cyclic(arch_spec(q(1, 3))), rational(q(0)), 2, rational(q(1))),
                    DomainError);
    CHECK_THROWS_AS(solve_R_power(lex_product(Model::finite_cyclic(4), rationals()), residue(0, lin({q(0)})), 2,
                                  residue(1, lin({q(0)}))),
                    DomainError);
    CHECK_THROWS_AS(solve_R_power(Model::linear(rationals()), Element{Rat(0), {}}, 1, Element{Rat(1), {}}),
                    DomainError);
    CHECK_THROWS_AS(solve_R_power(circle, turn(0, 1), 0, turn(1, 2)), UsageError);
}

TEST_CASE("R(a, x^m, b x^n)") {
    const Element a = turn(1, 10);
    const Element b = turn(1, 5);
    auto solution = solve_R_mixed(circle, a, 2, b, 1);
    // Direct integer oracle over ℤ/120: a = 12, b = 24.
    for (long k = 0; k < 120; ++k) {
        CAPTURE(k);
        CHECK(solution.contains(turn(k, 120)) == integer_R(12, mod(2 * k, 120), mod(24 + k, 120)));
    }
    auto formula = Formula::of(RelAtom{a, 0, circle.identity(), 2, b, 1});
    CHECK(verify_solution(circle, formula, solution, VerifyMode::exhaustive(120)).ok());
    CHECK(verify_solution(circle, formula, solution, VerifyMode::exhaustive(oracle_modulus(circle, formula))).ok());

    // a = b, and sweeps over all (a, b) on a coarse grid with several exponent pairs.
    CHECK(verify_solution(circle, Formula::of(RelAtom{a, 0, circle.identity(), 3, a, 1}), solve_R_mixed(circle, a, 3, a, 1),
                          VerifyMode::exhaustive(360))
              .ok());
    for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}}) {
        for (long i = 0; i < 12; ++i) {
            for (long j = 0; j < 12; ++j) {
                Element ai = turn(i, 12);
                Element bj = turn(j, 12);
                auto sol = solve_R_mixed(circle, ai, m, bj, n);
                auto f = Formula::of(RelAtom{ai, 0, circle.identity(), m, bj, n});
                auto report = verify_solution(circle, f, sol, VerifyMode::exhaustive(oracle_modulus(circle, f)));
                CAPTURE(to_string(f));
                CAPTURE(sol.describe());
                REQUIRE(report.ok());
                // Endpoint audit: every endpoint lies in (1/(12·m·n·(m−n)))·ℤ turns.
                const long bound = 12 * m * n * (m - n);
                auto on_lattice = [&](const Element& g) {
                    return (bound % std::get<Angle>(g.base).rat_part().get_den()) == 0;
                };
                for (const auto& g : sol.singletons()) {
                    REQUIRE(on_lattice(g));
                }
                for (const auto& arc : sol.arcs()) {
                    REQUIRE(on_lattice(arc.from));
                    REQUIRE(on_lattice(arc.to));
                }
            }
        }
    }
    CHECK_THROWS_AS(solve_R_mixed(circle, a, 1, b, 2), UsageError);
}

TEST_CASE("x^n = b") {
    auto halves = solve_roots(circle, circle.identity(), 2, turn(1, 3));
    CHECK(halves.singletons() == std::vector<Element>{turn(1, 6), turn(2, 3)});
    CHECK(halves.arcs().empty());
    CHECK(solve_roots(circle, turn(1, 5), 1, turn(1, 2)).singletons() == std::vector<Element>{turn(3, 10)});
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        std::int64_t n = rng.uniform(1, 9);
        auto roots = solve_roots(circle, turn(rng.uniform(0, 30), 31), n, turn(rng.uniform(0, 6), 7));
        CHECK(roots.singletons().size() == static_cast<std::size_t>(n));
        CHECK(roots.arcs().empty());
    }
    // Tails and the quadratic circle.
    Model tailed = lex_product(circle, rationals());
    auto tail_roots = solve_roots(tailed, tailed.identity(), 2, turn_tail(0, 1, -1));
    CHECK(tail_roots.singletons() ==
          std::vector<Element>{Element{Angle::from_rat(q(1, 2)), lin({q(-1, 2)})},
                               Element{Angle(), lin({q(-1, 2)})}});
    Model quadratic = Model::quadratic_circle();
    auto root2 = solve_roots(quadratic, quadratic.identity(), 2, angle(q(0), q(1, 4)));
    CHECK(root2.singletons().size() == 2);
    for (const auto& g : root2.singletons()) {
        CHECK(quadratic.multiple(g, Int(2)) == angle(q(0), q(1, 4)));
    }
}

TEST_CASE("solve over formulas") {
    Bindings bindings{{"a", turn(1, 10)}, {"b", turn(2, 5)}, {"c", turn(1, 5)}};
    auto parse = [&](const std::string& text) { return parse_formula(circle, text, bindings); };
    CHECK(solve(circle, parse("R(a,x,b) & R(b,x,a)")).is_empty());
    auto nonzero = solve(circle, parse("!(x=e)"));
    CHECK(nonzero == IntervalUnion::singleton(circle, circle.identity()).complement());

    // The two worked examples together.
    Formula both = parse("R(a, x^2, b) & R(a, x^2, c*x)");
    auto solution = solve(circle, both);
    for (long k = 0; k < 120; ++k) {
        bool power = integer_R(12, mod(2 * k, 120), 48);
        bool mixed = integer_R(12, mod(2 * k, 120), mod(24 + k, 120));
        CHECK(solution.contains(turn(k, 120)) == (power && mixed));
    }
    CHECK(solve(circle, both) == solution);

    // De Morgan and idempotence on solved formulas.
    Formula other = parse("R(e, x^3, c) | x^2 = a");
    CHECK(solve(circle, Formula::negation(Formula::conjunction(both, other))) ==
          solve(circle, Formula::disjunction(Formula::negation(both), Formula::negation(other))));

    // Inversion law: φ(x⁻¹) solves to the inverse of φ's solution.
    Formula inverted = parse("R(a, x^-2, b) & R(a, x^-2, c*x^-1)");
    CHECK(solve(circle, inverted) == solution.inverted());
}

TEST_CASE("oracle equivalence over rational circles") {
    // 200 atoms and 50 boolean combinations with N-compatible coefficients, on two models.
    const Model tailed = lex_product(circle, rationals());
    for (const Model* model : {&circle, &tailed}) {
        CAPTURE(model->describe());
        Rng rng(model == &circle ? 101 : 202);
        std::int64_t den = 1;
        auto coefficient = [&]() -> Element {
            Element g = turn(rng.uniform(0, den - 1), den);
            if (model->has_tail()) {
                g.tail = lin({q(rng.uniform(-1, 1))});
            }
            return g;
        };
        FormulaGen gen{*model, rng, coefficient};
        std::int64_t mismatches = 0;
        for (int i = 0; i < 250; ++i) {
            den = std::vector<long>{6, 8, 10, 12}[static_cast<std::size_t>(rng.uniform(0, 3))];
            Formula formula = i < 200 ? Formula::of(gen.atom()) : gen.formula(3);
            // Beyond the 360·12 cap only sampled verification runs.
            const std::int64_t modulus = oracle_modulus(*model, formula);
            const VerifyMode mode = modulus <= 4320 ? VerifyMode::exhaustive(modulus) : VerifyMode::sampled(4320, 9);
            IntervalUnion solution = solve(*model, formula);
            auto report = verify_solution(*model, formula, solution, mode);
            for (const auto& x : boundary_probes(*model, solution)) {
                if (evaluate(*model, formula, x) != solution.contains(x)) {
                    ++report.checked;
                    report.mismatches.push_back({x, !solution.contains(x), solution.contains(x)});
                }
            }
            CAPTURE(to_string(formula));
            CAPTURE(solution.describe());
            REQUIRE(report.ok());
            mismatches += static_cast<std::int64_t>(report.mismatches.size());
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("sampled equivalence with quadratic coefficients") {
    const Model quadratic = Model::quadratic_circle();
    Rng rng(404);
    auto coefficient = [&] { return angle(q(rng.uniform(0, 11), 12), q(rng.uniform(-3, 3), 7)); };
    FormulaGen gen{quadratic, rng, coefficient};
    for (int i = 0; i < 12; ++i) {
        Formula formula = i < 8 ? Formula::of(gen.atom()) : gen.formula(3);
        IntervalUnion solution = solve(quadratic, formula);
        auto report = verify_solution(quadratic, formula, solution, VerifyMode::sampled(10000, 1000 + i));
        CHECK(report.checked == 10000);
        for (const auto& x : boundary_probes(quadratic, solution)) {
            if (evaluate(quadratic, formula, x) != solution.contains(x)) {
                report.mismatches.push_back({x, !solution.contains(x), solution.contains(x)});
            }
        }
        CAPTURE(to_string(formula));
        CAPTURE(solution.describe());
        CHECK(report.ok());
    }
}

TEST_CASE("wound-round models") {
    // ℚ ⃗× ℚ wound at (1, 1/2): divisible with torsion.
    const Model wound_model = Model::wound_round(rationals(2), lin({q(1), q(1, 2)}));
    REQUIRE(is_c_divisible(wound_model));
    Rng rng(505);
    auto coefficient = [&] {
        return wound(reduce_mod(lin({q(rng.uniform(0, 5), 6), q(rng.uniform(-2, 2), 3)}), lin({q(1), q(1, 2)})));
    };
    FormulaGen gen{wound_model, rng, coefficient};
    for (int i = 0; i < 30; ++i) {
        Formula formula = i < 20 ? Formula::of(gen.atom()) : gen.formula(2);
        IntervalUnion solution = solve(wound_model, formula);
        auto report = verify_solution(wound_model, formula, solution, VerifyMode::sampled(500, 77 + i));
        for (const auto& x : boundary_probes(wound_model, solution)) {
            if (evaluate(wound_model, formula, x) != solution.contains(x)) {
                report.mismatches.push_back({x, !solution.contains(x), solution.contains(x)});
            }
        }
        CAPTURE(to_string(formula));
        CAPTURE(solution.describe());
        CHECK(report.ok());
    }
}

TEST_CASE("minimality classes") {
    auto tag = [](const Model& model) { return minimality_class(model).tag; };
    using M = MinimalityClass;
    CHECK(tag(lex_product(circle, rationals())) == M::CyclicallyMinimal);
    CHECK(tag(circle) == M::CyclicallyMinimal);
    CHECK(tag(Model::quadratic_circle()) == M::CyclicallyMinimal);
    CHECK(tag(Model::wound_round(rationals(2), lin({q(1), q(1, 2)}))) == M::CyclicallyMinimal);
    CHECK(tag(lex_product(Model::finite_cyclic(4), rationals())) == M::WeaklyCyclicallyMinimalOnly);
    CHECK(tag(Model::wound_round(LinearDescriptor({LinearComponent::integers(), LinearComponent::rationals()}),
                                 lin({q(3), q(1, 2)}))) == M::WeaklyCyclicallyMinimalOnly);
    CHECK(tag(Model::linear(rationals())) == M::WeaklyCyclicallyMinimalOnly);
    CHECK(tag(Model::q_cyclic(arch_spec(q(1, 3)))) == M::Neither);
    CHECK(tag(Model::finite_cyclic(4)) == M::Neither);
    CHECK(tag(lex_product(Model::finite_cyclic(4), integers())) == M::Neither);
    CHECK(tag(Model::linear(integers())) == M::Neither);
    CHECK(tag(Model::generated_circle({Angle::from_rat(q(1, 3)), Angle(Quad(Rat(0), q(1, 2)))})) == M::Neither);
    CHECK(to_string(M::WeaklyCyclicallyMinimalOnly) == "weakly_cyclically_minimal_only");
}
