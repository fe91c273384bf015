// Acceptance suite: one PASS/FAIL line per criterion, each checked against an independent oracle.
// Usage: acceptance <path to the cog executable>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cog/core/axioms.hpp"
#include "cog/core/relation.hpp"
#include "cog/core/sampling.hpp"
#include "cog/io/json.hpp"
#include "cog/qorders/characteristic.hpp"
#include "cog/solver/solver.hpp"
#include "cog/structure/structure.hpp"
#include "cog/theory/theory.hpp"
#include "cog/unwound/unwound.hpp"
#include "spine_tables.hpp"
#include "support.hpp"

using namespace cog;
using namespace cog::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Records the first failure and counts checks.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) {
                first_failure_ = what;
            }
        }
    }
    std::int64_t checks() const { return checks_; }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) {
            return {true, summary + ", " + std::to_string(checks_) + " checks"};
        }
        return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " +
                           first_failure_};
    }

private:
    std::int64_t checks_ = 0;
    std::int64_t failures_ = 0;
    std::string first_failure_;
};

// 1. Axioms on every ℤ/n with n ≤ 24.
Outcome axiom_suite() {
    Tally tally;
    for (std::int64_t n = 1; n <= 24; ++n) {
        AxiomReport report = check_axioms(Model::finite_cyclic(n), ExhaustiveMode{24});
        tally.check(report.passed() && report.mode == "exhaustive", "Z/" + std::to_string(n));
    }
    return tally.outcome("Z/1..Z/24 exhaustive, zero violations");
}

// 2. uw(ℤ/n) against the integer lift (w, r) ↦ w·n + r.
Outcome unwound_correctness() {
    Tally tally;
    for (long n = 1; n <= 12; ++n) {
        Model base = Model::finite_cyclic(n);
        Unwound uw(base);
        std::vector<UnwoundElement> window;
        for (long w = -3; w <= 3; ++w) {
            for (const auto& g : base.elements()) {
                window.push_back({Int(w), g});
            }
        }
        auto lift = [n](const UnwoundElement& x) { return x.winding.get_si() * n + std::get<Residue>(x.g.base).value; };
        std::set<long> image;
        for (const auto& a : window) {
            image.insert(lift(a));
            for (const auto& b : window) {
                const long la = lift(a);
                const long lb = lift(b);
                const auto order = uw.compare(a, b);
                const bool ok = ((order < 0) == (la < lb)) && ((order == 0) == (la == lb)) &&
                                lift(uw.mul(a, b)) == la + lb;
                if (!ok) {
                    tally.check(false, "n=" + std::to_string(n) + " " + to_string(a) + " vs " + to_string(b));
                }
            }
            tally.check(lift(uw.inverse(a)) == -lift(a), "inverse at n=" + std::to_string(n));
        }
        // Bijective onto the integer window [−3n, 4n).
        tally.check(image.size() == window.size() && *image.begin() == -3 * n && *image.rbegin() == 4 * n - 1,
                    "window image at n=" + std::to_string(n));
    }
    return tally.outcome("n <= 12, |w| <= 3, order and product match the integer lift");
}

// 3. [p]uw(G) against [p]G and the torsion criterion.
Outcome p_classes() {
    Tally tally;
    struct Case {
        std::string name;
        Model model;
        std::int64_t p;
    };
    const Model qc = Model::q_cyclic(QOrderSpec{Angle(), Rat(1), FFamily::unit()});
    const std::vector<Case> cases{{"Z/6", Model::finite_cyclic(6), 2},
                                  {"Z/6", Model::finite_cyclic(6), 3},
                                  {"Z/5", Model::finite_cyclic(5), 2},
                                  {"Q unit", qc, 2},
                                  {"Q unit", qc, 3}};
    for (const auto& c : cases) {
        const std::string label = c.name + " p=" + std::to_string(c.p);
        const std::int64_t computed = count_unwound_p_classes(c.model, c.p);
        const std::int64_t base = count_p_classes(c.model, c.p);
        const std::int64_t expected = has_p_torsion(c.model, c.p) ? base : c.p * base;
        tally.check(computed == expected, label + ": torsion criterion");
        if (c.model.finite_order()) {
            tally.check(base == count_p_classes_brute(c.model, c.p), label + ": [p]G by enumeration");
            tally.check(computed == count_unwound_p_classes_brute(c.model, c.p, 3), label + ": window enumeration");
            continue;
        }
        // Torsion-free divisible base: every x = (w, g) reduces modulo p-th powers to (w − p·v, e) via
        // h = g/p, and z^k is a p-th power only when p | k because y^p = (v', p·h) needs h = e.
        Unwound uw(c.model);
        Rng rng(static_cast<std::uint64_t>(31 * c.p));
        std::set<std::int64_t> residues;
        for (int i = 0; i < 400; ++i) {
            Element g = sample_element(c.model, rng, 50);
            UnwoundElement x{Int(rng.uniform(-5, 5)), g};
            auto h = divide(c.model, g, Int(c.p));
            if (!h) {
                tally.check(false, label + ": no p-th root of " + to_string(g));
                continue;
            }
            UnwoundElement reduced = uw.mul(x, uw.inverse(uw.power(uw.embed(*h), Int(c.p))));
            tally.check(reduced.g == c.model.identity(), label + ": reduction to a power of z");
            Int w = reduced.winding % c.p;
            residues.insert((w.get_si() + c.p) % c.p);
            if (!(g == c.model.identity())) {
                tally.check(!torsion_order(c.model, g).has_value(), label + ": torsion-free");
            }
        }
        tally.check(static_cast<std::int64_t>(residues.size()) == computed, label + ": residues of z reached");
    }
    return tally.outcome("5 fixtures, exact equality");
}

// 4. Range and remainder conditions of the generated map, and recovery from a prime-power grid.
FFamily random_family(Rng& rng, bool nonzero_first_digits) {
    static const std::vector<std::int64_t> pool{2, 3, 5, 7, 11, 13};
    const DefaultRule rule =
        nonzero_first_digits || rng.chance(1, 2) ? DefaultRule::Unit : DefaultRule::Zero;
    FFamily::DigitMap digits;
    const auto listed = rng.uniform(1, 3);
    for (std::int64_t i = 0; i < listed; ++i) {
        const std::int64_t p = pool[static_cast<std::size_t>(rng.uniform(0, 5))];
        std::vector<int> list(static_cast<std::size_t>(rng.uniform(nonzero_first_digits ? 1 : 0, 4)));
        for (std::size_t r = 0; r < list.size(); ++r) {
            const std::int64_t lo = (nonzero_first_digits && r == 0) ? 1 : 0;
            list[r] = static_cast<int>(rng.uniform(lo, p - 1));
        }
        digits[p] = std::move(list);
    }
    return FFamily(rule, std::move(digits));
}

Outcome crt_machinery() {
    Rng rng(4004);
    std::vector<FFamily> families;
    for (int i = 0; i < 20; ++i) {
        families.push_back(random_family(rng, false));
    }
    constexpr std::int64_t limit = 1000;
    auto conditions = [](const FFamily& family) {
        std::vector<std::int64_t> table(limit * limit + 1);
        for (std::int64_t k = 1; k <= limit * limit; ++k) {
            table[static_cast<std::size_t>(k)] = crt_f(family, k);
        }
        std::int64_t failures = 0;
        for (std::int64_t n = 1; n <= limit; ++n) {
            const std::int64_t fn = table[static_cast<std::size_t>(n)];
            failures += (fn < 0 || fn >= n) ? 1 : 0;
            for (std::int64_t m = 1; m <= limit; ++m) {
                failures += table[static_cast<std::size_t>(n * m)] % n != fn ? 1 : 0;
            }
        }
        return failures;
    };
    std::vector<std::future<std::int64_t>> jobs;
    for (const auto& family : families) {
        jobs.push_back(std::async(std::launch::async, conditions, std::cref(family)));
    }
    Tally tally;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        tally.check(jobs[i].get() == 0, "range/remainder on family " + std::to_string(i));
    }
    for (std::size_t i = 0; i < families.size(); ++i) {
        for (int depth = 1; depth <= 5; ++depth) {
            std::map<std::int64_t, std::int64_t> grid;
            for (std::int64_t p : primes_up_to(13)) {
                for (int r = 1; r <= depth; ++r) {
                    grid[ipow(p, r)] = crt_f(families[i], ipow(p, r));
                }
            }
            FFamily back = family_from_f(grid);
            bool same = true;
            for (std::int64_t p : primes_up_to(13)) {
                same = same && back.digits(p, depth) == families[i].digits(p, depth);
            }
            for (const auto& [key, value] : grid) {
                same = same && crt_f(back, key) == value;
            }
            tally.check(same, "grid roundtrip on family " + std::to_string(i) + " depth " + std::to_string(depth));
        }
    }
    return tally.outcome("20 families, m,n <= 1000, grids p <= 13 depth <= 5");
}

// 5. f_{G,p} by definition against the generated map.
Outcome f_consistency() {
    Rng rng(5005);
    Tally tally;
    for (int i = 0; i < 10; ++i) {
        FFamily family = random_family(rng, true);
        Model model = build_qcyclic(QOrderSpec{Angle(), Rat(rng.uniform(1, 5)), family});
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (int n = 1; n <= 4; ++n) {
                const std::string label = "fixture " + std::to_string(i) + " p=" + std::to_string(p) +
                                          " n=" + std::to_string(n);
                const Int f = f_G_p(model, p, n);
                const Int pn(ipow(p, n));
                tally.check(f == crt_f(family, ipow(p, n)), label + ": generated map");
                tally.check(gcd(f, Int(p)) == 1, label + ": coprime");
                for (int k = n + 1; k <= 4; ++k) {
                    tally.check(f_G_p(model, p, k) % pn == f, label + ": chain to " + std::to_string(k));
                }
            }
        }
    }
    return tally.outcome("10 fixtures, p in {2,3,5,7}, n <= 4");
}

// 6. The equivalence decider through the command-line tool.
int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome equivalence_matrix(const std::string& cog, const std::filesystem::path& dir) {
    auto qc = [](FFamily family, long a) { return Model::q_cyclic(QOrderSpec{Angle(), Rat(a), std::move(family)}); };
    auto two = [](std::vector<int> digits) { return FFamily(DefaultRule::Unit, {{2, std::move(digits)}}); };
    struct Fixture {
        Model model;
        // Fixtures sharing a label have the same theory: they differ only in the linear scale a, or are
        // divisible linear groups, or c-divisible circle groups.
        int label;
    };
    const std::vector<Fixture> fixtures{
        {Model::linear(rationals()), 0},
        {Model::linear(LinearDescriptor({LinearComponent::quadratic_field()})), 0},
        {Model::rational_circle(), 1},
        {Model::quadratic_circle(), 1},
        {qc(FFamily::unit(), 1), 2},
        {qc(FFamily::unit(), 2), 2},
        {qc(FFamily::unit(), 5), 2},
        {qc(two({1, 1, 0}), 1), 3},
        {qc(two({1, 1, 0}), 3), 3},
        {qc(two({1, 1, 1}), 1), 4},
        {qc(two({1, 1, 1}), 2), 4},
        {Model::q_cyclic(arch_spec(q(1, 4))), 5},
    };
    auto tag = [](const Model& model) { return classify(model).tag; };
    std::vector<std::string> paths;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        io::SpecFile spec;
        spec.model = fixtures[i].model;
        const auto path = dir / ("fixture" + std::to_string(i) + ".json");
        std::ofstream(path) << io::to_json(spec).dump(2) << '\n';
        paths.push_back(path.string());
    }
    Tally tally;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        for (std::size_t j = 0; j < fixtures.size(); ++j) {
            const auto report_path = dir / "report.json";
            const int code = run_command(cog + " equiv " + paths[i] + " " + paths[j] +
                                         " --primes 2,3,5,7 --depth 3 > " + report_path.string() + " 2>&1");
            const std::string label = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            const bool same = fixtures[i].label == fixtures[j].label;
            tally.check(code == (same ? 0 : 1), label + " exit " + std::to_string(code));
            if (code != 0 && code != 1) {
                continue;
            }
            std::ifstream in(report_path);
            const io::Json report = io::Json::parse(in);
            const io::Json& witness = report["result"]["witness"];
            if (tag(fixtures[i].model) != tag(fixtures[j].model)) {
                tally.check(witness["item"] == "class", label + ": class witness");
            }
            const std::set<int> digit_pair{fixtures[i].label, fixtures[j].label};
            if (digit_pair == std::set<int>{3, 4}) {
                tally.check(witness["item"] == "f_table" && witness["p"] == 2 && witness["n"] == 3,
                            label + ": digit witness at p=2, n=3");
            }
        }
    }
    return tally.outcome("12 fixtures, 144 ordered pairs via the CLI");
}

// 7. The solver against direct evaluation.
struct FormulaGen {
    Rng& rng;
    std::function<Element()> coefficient;

    std::int64_t exponent() { return rng.uniform(-3, 3); }
    AtomicFormula atom() {
        if (rng.chance(1, 4)) {
            return EqAtom{coefficient(), exponent(), coefficient()};
        }
        return RelAtom{coefficient(), exponent(), coefficient(), exponent(), coefficient(), exponent()};
    }
    Formula formula(int depth) {
        if (depth == 0 || rng.chance(1, 4)) {
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

Outcome solver_oracle() {
    constexpr std::int64_t cap = 360 * 12;
    Tally tally;
    const std::vector<Model> models{Model::rational_circle(), lex_product(Model::rational_circle(), rationals())};
    std::int64_t grid_points = 0;
    for (std::size_t which = 0; which < models.size(); ++which) {
        const Model& model = models[which];
        Rng rng(700 + which);
        std::int64_t den = 1;
        auto coefficient = [&]() -> Element {
            Element g{Angle::from_rat(q(rng.uniform(0, den - 1), den)), {}};
            if (model.has_tail()) {
                g.tail = lin({q(rng.uniform(-2, 2))});
            }
            return g;
        };
        FormulaGen gen{rng, coefficient};
        int atoms = 0;
        int combinations = 0;
        while (atoms < 200 || combinations < 50) {
            // Coefficients in the N-torsion for N | 360.
            den = std::vector<long>{2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30, 36, 40, 45, 60, 72, 90, 120, 180,
                                    360}[static_cast<std::size_t>(rng.uniform(0, 22))];
            const bool atomic = atoms < 200;
            Formula formula = atomic ? Formula::of(gen.atom()) : gen.formula(3);
            const std::int64_t modulus = oracle_modulus(model, formula);
            if (modulus > cap) {
                continue;
            }
            (atomic ? atoms : combinations) += 1;
            IntervalUnion solution = solve(model, formula);
            VerifyReport report = verify_solution(model, formula, solution, VerifyMode::exhaustive(modulus));
            grid_points += report.checked;
            tally.check(report.ok(), model.describe() + ": " + to_string(formula) + " -> " + solution.describe());
        }
    }
    const Model quadratic = Model::quadratic_circle();
    Rng rng(777);
    auto coefficient = [&] { return angle(q(rng.uniform(0, 11), 12), q(rng.uniform(-3, 3), 7)); };
    FormulaGen gen{rng, coefficient};
    for (int i = 0; i < 12; ++i) {
        Formula formula = i < 8 ? Formula::of(gen.atom()) : gen.formula(3);
        IntervalUnion solution = solve(quadratic, formula);
        VerifyReport report = verify_solution(quadratic, formula, solution, VerifyMode::sampled(10000, 900 + i));
        tally.check(report.ok() && report.checked == 10000, "quadratic: " + to_string(formula));
    }
    return tally.outcome("2 x (200 atoms + 50 combinations) on full oracle grids (" + std::to_string(grid_points) +
                         " points), 12 quadratic formulas x 10^4 samples");
}

// 8. Realization roundtrip for ordered prime partitions.
void ordered_partitions(const std::vector<std::int64_t>& primes,
                        const std::function<void(const std::vector<std::vector<std::int64_t>>&)>& visit) {
    const std::size_t n = primes.size();
    for (std::size_t classes = 1; classes <= n; ++classes) {
        std::vector<std::size_t> label(n, 0);
        while (true) {
            std::vector<std::vector<std::int64_t>> out(classes);
            for (std::size_t i = 0; i < n; ++i) {
                out[label[i]].push_back(primes[i]);
            }
            if (std::all_of(out.begin(), out.end(), [](const auto& c) { return !c.empty(); })) {
                visit(out);
            }
            std::size_t i = 0;
            while (i < n && ++label[i] == classes) {
                label[i++] = 0;
            }
            if (i == n) {
                break;
            }
        }
    }
}

Outcome partition_roundtrip() {
    Tally tally;
    auto check = [&tally](const OrderedPartition& partition) {
        const Model model = realize_partition(partition);
        const TheoryInvariant invariant = extract_invariant(model, partition.primes(), 3);
        tally.check(!partition_mismatch(partition, invariant) && partition_of(invariant) == partition,
                    to_string(partition));
    };
    int count = 0;
    ordered_partitions({2, 3, 5}, [&](const auto& classes) {
        ++count;
        check(OrderedPartition{classes, true, false, FFamily::unit()});
        check(OrderedPartition{classes, false, false, FFamily::unit()});
        if (classes.size() == 1) {
            check(OrderedPartition{classes, true, true, FFamily::unit()});
            check(OrderedPartition{classes, false, true, FFamily(DefaultRule::Unit, {{2, {1, 1}}, {5, {3, 0, 2}}})});
        }
    });
    tally.check(count == 13, "13 ordered partitions of {2,3,5}, got " + std::to_string(count));
    for (const char* text : {"2 < 3 < 5 < 7", "7 < 5 < 3 < 2", "0 < 2,3,5,7", "2,3,5,7 !discrete",
                             "0 < 2,7 !discrete(2:1,0,1;7:3)", "2,3 < 5,7", "0 < 3 < 2,5,7", "5 < 2,3 < 7",
                             "0 < 2 < 3 < 5,7", "3,7 < 2,5"}) {
        check(parse_partition(text));
    }
    return tally.outcome("13 partitions of {2,3,5} with flag variants, 10 of {2,3,5,7}");
}

// 9. Spine flags against the hand-derived tables.
Outcome spine_flags() {
    Tally tally;
    for (const auto& c : spine_cases()) {
        tally.check(render(spine(spine_fixture(c.fixture), c.n)) == c.expected,
                    c.fixture + " n=" + std::to_string(c.n));
    }
    return tally.outcome("3 stacks x n in {2,3,4,6,12}");
}

// 10. Minimality classes.
Outcome minimality() {
    using M = MinimalityClass;
    const std::vector<std::pair<Model, M>> cases{
        {lex_product(Model::rational_circle(), rationals()), M::CyclicallyMinimal},
        {lex_product(Model::finite_cyclic(4), rationals()), M::WeaklyCyclicallyMinimalOnly},
        {Model::q_cyclic(QOrderSpec{Angle(), Rat(1), FFamily::unit()}), M::Neither},
        {Model::quadratic_circle(), M::CyclicallyMinimal},
        {Model::linear(rationals()), M::WeaklyCyclicallyMinimalOnly},
        {lex_product(Model::finite_cyclic(6), LinearDescriptor({LinearComponent::quadratic_field()})),
         M::WeaklyCyclicallyMinimalOnly},
        {lex_product(Model::finite_cyclic(4), integers()), M::Neither},
        {Model::finite_cyclic(7), M::Neither},
    };
    Tally tally;
    for (const auto& [model, expected] : cases) {
        const auto verdict = minimality_class(model);
        tally.check(verdict.tag == expected, model.describe() + " -> " + to_string(verdict.tag));
    }
    return tally.outcome("3 worked examples and 5 further descriptors");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <cog executable>\n";
        return 2;
    }
    const std::string cog = argv[1];
    const auto dir = std::filesystem::temp_directory_path() / ("cog_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);

    struct Criterion {
        int number;
        std::string name;
        double limit_s;  // 0 means no time limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "axiom suite", 10, axiom_suite},
        {2, "unwound correctness", 5, unwound_correctness},
        {3, "p-classes of the unwound", 0, p_classes},
        {4, "CRT machinery", 30, crt_machinery},
        {5, "f_{G,p} consistency", 0, f_consistency},
        {6, "equivalence decider", 0, [&] { return equivalence_matrix(cog, dir); }},
        {7, "solver oracle equivalence", 60, solver_oracle},
        {8, "partition realization roundtrip", 0, partition_roundtrip},
        {9, "spine flags", 0, spine_flags},
        {10, "minimality classifier", 0, minimality},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& error) {
            outcome = {false, std::string("exception: ") + error.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && criterion.limit_s > 0 && seconds >= criterion.limit_s) {
            outcome = {false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(criterion.limit_s) + " s"};
        }
        failed += outcome.pass ? 0 : 1;
        std::ostringstream time;
        time << std::fixed << std::setprecision(2) << seconds << " s";
        std::cout << "criterion " << std::setw(2) << criterion.number << " " << (outcome.pass ? "PASS" : "FAIL")
                  << "  " << criterion.name << ": " << outcome.detail << " [" << time.str() << "]" << std::endl;
    }
    std::filesystem::remove_all(dir);
    return failed == 0 ? 0 : 1;
}
