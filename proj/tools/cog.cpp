// Command-line front end: loads JSON model specs, runs one analysis and prints a JSON report.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cog/core/axioms.hpp"
#include "cog/error.hpp"
#include "cog/io/json.hpp"
#include "cog/solver/solver.hpp"
#include "cog/theory/theory.hpp"

namespace {

using cog::io::Json;

enum ExitCode : int { Success = 0, Negative = 1, InputError = 2, Unsupported = 3 };

constexpr std::int64_t kDefaultHeight = 100;
constexpr std::int64_t kDefaultSamples = 1000;
constexpr int kDefaultDepth = 3;
constexpr std::int64_t kOracleCap = 360 * 12;

const std::vector<std::int64_t> kDefaultPrimes{2, 3, 5, 7};

/// COG_SEED overrides the built-in default of 0.
std::uint64_t default_seed() {
    const char* text = std::getenv("COG_SEED");
    if (text == nullptr || *text == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        unsigned long long value = std::stoull(text, &used);
        if (used == std::string(text).size()) {
            return value;
        }
    } catch (const std::exception&) {
    }
    throw cog::UsageError(std::string("COG_SEED='") + text + "' is not a nonnegative integer");
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto span = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(span).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(Json report, const Stopwatch& clock, const std::string& output = "") {
    report["timing"] = Json{{"elapsed_ms", clock.elapsed_ms()}};
    if (output.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(output);
    if (!out) {
        throw cog::UsageError("cannot write '" + output + "'");
    }
    out << report.dump(2) << '\n';
}

// ---------------------------------------------------------------------------------------------

struct AxiomArgs {
    std::string spec;
    std::optional<std::int64_t> exhaustive;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> height;
};

int run_check_axioms(const AxiomArgs& args) {
    Stopwatch clock;
    cog::io::SpecFile spec = cog::io::load_spec(args.spec);
    Json bounds;
    cog::CheckMode mode;
    if (args.exhaustive) {
        if (args.samples || args.seed) {
            throw cog::UsageError("--exhaustive cannot be combined with --samples or --seed");
        }
        mode = cog::ExhaustiveMode{*args.exhaustive};
        bounds = Json{{"exhaustive", *args.exhaustive}};
    } else {
        cog::SampledMode sampled;
        sampled.count = static_cast<std::size_t>(args.samples.value_or(spec.samples.value_or(kDefaultSamples)));
        sampled.seed = args.seed.value_or(spec.seed.value_or(default_seed()));
        sampled.height = args.height.value_or(spec.height.value_or(kDefaultHeight));
        mode = sampled;
        bounds = Json{{"samples", sampled.count}, {"seed", sampled.seed}, {"height", sampled.height}};
    }
    cog::AxiomReport report = cog::check_axioms(spec.model, mode);
    emit(Json{{"command", Json{{"name", "check-axioms"}, {"spec", args.spec}}},
              {"model", cog::io::to_json(spec.model)},
              {"bounds", bounds},
              {"result", cog::io::to_json(report)}},
         clock);
    return report.passed() ? Success : Negative;
}

struct TheoryArgs {
    std::vector<std::string> specs;
    std::vector<std::int64_t> primes = kDefaultPrimes;
    int depth = kDefaultDepth;
};

Json theory_bounds(const TheoryArgs& args) { return Json{{"primes", args.primes}, {"depth", args.depth}}; }

int run_invariant(const TheoryArgs& args) {
    Stopwatch clock;
    cog::io::SpecFile spec = cog::io::load_spec(args.specs.at(0));
    cog::TheoryInvariant invariant = cog::extract_invariant(spec.model, args.primes, args.depth);
    emit(Json{{"command", Json{{"name", "invariant"}, {"spec", args.specs.at(0)}}},
              {"model", cog::io::to_json(spec.model)},
              {"bounds", theory_bounds(args)},
              {"result", cog::io::to_json(invariant)}},
         clock);
    return Success;
}

int run_equiv(const TheoryArgs& args) {
    Stopwatch clock;
    cog::io::SpecFile first = cog::io::load_spec(args.specs.at(0));
    cog::io::SpecFile second = cog::io::load_spec(args.specs.at(1));
    cog::TheoryInvariant left = cog::extract_invariant(first.model, args.primes, args.depth);
    cog::TheoryInvariant right = cog::extract_invariant(second.model, args.primes, args.depth);
    cog::Verdict verdict = cog::equivalent(left, right);
    emit(Json{{"command", Json{{"name", "equiv"}, {"specs", args.specs}}},
              {"bounds", theory_bounds(args)},
              {"result", cog::io::to_json(verdict)},
              {"invariants", Json::array({cog::io::to_json(left), cog::io::to_json(right)})}},
         clock);
    return verdict.equivalent ? Success : Negative;
}

int run_spine(const std::string& path, std::int64_t n) {
    Stopwatch clock;
    cog::io::SpecFile spec = cog::io::load_spec(path);
    cog::SpineView view = cog::spine(spec.model, n);
    emit(Json{{"command", Json{{"name", "spine"}, {"spec", path}}},
              {"model", cog::io::to_json(spec.model)},
              {"bounds", Json{{"n", n}}},
              {"result", cog::io::to_json(view)}},
         clock);
    return Success;
}

struct SolveArgs {
    std::string spec;
    std::string formula;
    std::string verify;
    std::optional<std::int64_t> grid;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;
};

int run_solve(const SolveArgs& args) {
    Stopwatch clock;
    cog::io::SpecFile spec = cog::io::load_spec(args.spec);
    cog::Formula formula;
    try {
        formula = cog::parse_formula(spec.model, args.formula, spec.bindings);
    } catch (const cog::ParseError& error) {
        std::cerr << "  " << args.formula << "\n  " << std::string(error.position(), ' ') << "^\n";
        throw;
    }
    cog::IntervalUnion solution = cog::solve(spec.model, formula);

    Json report{{"command", Json{{"name", "solve"}, {"spec", args.spec}, {"formula", args.formula}}},
                {"model", cog::io::to_json(spec.model)},
                {"parsed", cog::to_string(formula)},
                {"result", cog::io::to_json(solution)}};
    int code = Success;
    if (!args.verify.empty()) {
        const std::uint64_t seed = args.seed.value_or(spec.seed.value_or(default_seed()));
        const std::int64_t samples = args.samples.value_or(spec.samples.value_or(kDefaultSamples));
        Json verification;
        cog::VerifyMode mode = cog::VerifyMode::sampled(samples, seed);
        if (args.verify == "exhaustive") {
            std::int64_t grid = args.grid ? *args.grid : cog::oracle_modulus(spec.model, formula);
            if (grid <= kOracleCap || args.grid) {
                mode = cog::VerifyMode::exhaustive(grid);
                verification = Json{{"mode", "exhaustive"}, {"grid", grid}};
            } else {
                verification = Json{{"mode", "sampled"},
                                    {"note", "oracle modulus " + std::to_string(grid) + " exceeds the cap " +
                                                 std::to_string(kOracleCap)},
                                    {"samples", samples},
                                    {"seed", seed}};
            }
        } else {
            verification = Json{{"mode", "sampled"}, {"samples", samples}, {"seed", seed}};
        }
        cog::VerifyReport checked = cog::verify_solution(spec.model, formula, solution, mode);
        const Json outcome = cog::io::to_json(spec.model, checked);
        for (const auto& [key, value] : outcome.items()) {
            verification[key] = value;
        }
        report["verification"] = verification;
        code = checked.ok() ? Success : Negative;
    }
    emit(report, clock);
    return code;
}

int run_realize(const std::string& expression, const std::string& output) {
    Stopwatch clock;
    cog::OrderedPartition partition = cog::parse_partition(expression);
    cog::io::SpecFile spec;
    spec.model = cog::realize_partition(partition);
    spec.description = "realization of " + cog::to_string(partition);
    Json document = cog::io::to_json(spec);
    if (output.empty()) {
        std::cout << document.dump(2) << '\n';
        return Success;
    }
    std::ofstream out(output);
    if (!out) {
        throw cog::UsageError("cannot write '" + output + "'");
    }
    out << document.dump(2) << '\n';
    out.close();
    emit(Json{{"command", Json{{"name", "realize-partition"}, {"expression", expression}}},
              {"result", Json{{"partition", cog::io::to_json(partition)}, {"output", output}}}},
         clock);
    return Success;
}

int run_minimality(const std::string& path) {
    Stopwatch clock;
    cog::io::SpecFile spec = cog::io::load_spec(path);
    emit(Json{{"command", Json{{"name", "minimality"}, {"spec", path}}},
              {"model", cog::io::to_json(spec.model)},
              {"result", cog::io::to_json(cog::minimality_class(spec.model))}},
         clock);
    return Success;
}

int report_error(const char* kind, const std::exception& error, int code) {
    std::cerr << "error (" << kind << "): " << error.what() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of cyclically ordered abelian groups"};
    app.require_subcommand(1);

    AxiomArgs axiom_args;
    auto* check = app.add_subcommand("check-axioms", "Check the cyclic-order and group axioms of a model");
    check->add_option("spec", axiom_args.spec, "Model spec file")->required();
    auto* exhaustive = check->add_option("--exhaustive", axiom_args.exhaustive, "Check every triple of a model of order at most N");
    auto* samples = check->add_option("--samples", axiom_args.samples, "Number of sampled triples");
    exhaustive->excludes(samples);
    check->add_option("--seed", axiom_args.seed, "Sampling seed");
    check->add_option("--height", axiom_args.height, "Sampling height bound");

    TheoryArgs theory_args;
    auto add_bounds = [&theory_args](CLI::App* command) {
        command->add_option("--primes", theory_args.primes, "Primes to probe")->delimiter(',');
        command->add_option("--depth", theory_args.depth, "Digit depth")->check(CLI::PositiveNumber);
    };
    auto* invariant = app.add_subcommand("invariant", "Extract the bounded theory invariant");
    invariant->add_option("spec", theory_args.specs, "Model spec file")->required()->expected(1);
    add_bounds(invariant);
    auto* equiv = app.add_subcommand("equiv", "Decide elementary equivalence up to bounds");
    equiv->add_option("specs", theory_args.specs, "Two model spec files")->required()->expected(2);
    add_bounds(equiv);

    std::string spine_spec;
    std::int64_t spine_n = 0;
    auto* spine = app.add_subcommand("spine", "Compute the n-spine of the unwound");
    spine->add_option("spec", spine_spec, "Model spec file")->required();
    spine->add_option("--n", spine_n, "Spine index")->required();

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve a one-variable quantifier-free formula");
    solve->add_option("spec", solve_args.spec, "Model spec file with coefficient bindings")->required();
    solve->add_option("formula", solve_args.formula, "Formula in x")->required();
    solve->add_option("--verify", solve_args.verify, "Check the solution against direct evaluation")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    solve->add_option("--grid", solve_args.grid, "Oracle grid size for exhaustive verification");
    solve->add_option("--samples", solve_args.samples, "Sample count for sampled verification");
    solve->add_option("--seed", solve_args.seed, "Sampling seed");

    std::string partition_expression;
    std::string partition_output;
    auto* realize = app.add_subcommand("realize-partition", "Build a model realizing an ordered prime partition");
    realize->add_option("expression", partition_expression, "Partition such as '2,3 < 5 !discrete'")->required();
    realize->add_option("-o,--output", partition_output, "Write the spec here instead of stdout");

    std::string minimality_spec;
    auto* minimality = app.add_subcommand("minimality", "Classify cyclic and weak cyclic minimality");
    minimality->add_option("spec", minimality_spec, "Model spec file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return InputError;
    }

    try {
        if (*check) {
            return run_check_axioms(axiom_args);
        }
        if (*invariant) {
            return run_invariant(theory_args);
        }
        if (*equiv) {
            return run_equiv(theory_args);
        }
        if (*spine) {
            return run_spine(spine_spec, spine_n);
        }
        if (*solve) {
            return run_solve(solve_args);
        }
        if (*realize) {
            return run_realize(partition_expression, partition_output);
        }
        if (*minimality) {
            return run_minimality(minimality_spec);
        }
    } catch (const cog::UnsupportedError& error) {
        return report_error("unsupported", error, Unsupported);
    } catch (const cog::ParseError& error) {
        return report_error("parse", error, InputError);
    } catch (const cog::ValidationError& error) {
        return report_error("validation", error, InputError);
    } catch (const cog::ConstructionError& error) {
        return report_error("construction", error, InputError);
    } catch (const cog::DomainError& error) {
        return report_error("domain", error, InputError);
    } catch (const cog::PreconditionError& error) {
        return report_error("precondition", error, InputError);
    } catch (const cog::UsageError& error) {
        return report_error("usage", error, InputError);
    }
    return InputError;
}
