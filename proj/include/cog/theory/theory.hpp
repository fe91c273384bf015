#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cog/core/model.hpp"
#include "cog/qorders/family.hpp"

namespace cog {

enum class TheoryClass { Linear, CDivisible, TorsionFreeNonlinear };

std::string to_string(TheoryClass tag);

struct Classification {
    TheoryClass tag = TheoryClass::Linear;
    /// Torsion-free nonlinear with no proper nontrivial c-convex subgroup.
    bool c_archimedean = false;
    std::string evidence;
};

/// Throws UnsupportedError for non-divisible models.
Classification classify(const Model& model);

/// Per-prime data of a torsion-free nonlinear model.
struct PrimeInvariant {
    std::int64_t prime = 0;
    /// Number of trailing linear-part blocks in H_p; larger depth means a larger subgroup.
    std::size_t depth = 0;
    bool is_zero = false;
    bool is_linear_part = false;
    bool discrete = false;
    /// f_{G,p}(1..depth bound) when discrete.
    std::vector<Int> f_table;

    friend bool operator==(const PrimeInvariant&, const PrimeInvariant&) = default;
};

enum class LevelRelation { Below, Equal, Above };

std::string to_string(LevelRelation relation);

struct TheoryInvariant {
    TheoryClass tag = TheoryClass::Linear;
    bool c_archimedean = false;
    std::vector<std::int64_t> primes;
    int depth = 0;
    /// One entry per probed prime, in the order of primes; empty unless torsion-free nonlinear.
    std::vector<PrimeInvariant> levels;

    /// How H_{primes[i]} compares with H_{primes[j]}.
    LevelRelation relation(std::size_t i, std::size_t j) const;
    const PrimeInvariant& level(std::int64_t p) const;

    friend bool operator==(const TheoryInvariant&, const TheoryInvariant&) = default;
};

/// Throws UnsupportedError for non-divisible models and UsageError for bad bounds.
TheoryInvariant extract_invariant(const Model& model, const std::vector<std::int64_t>& primes, int depth);

struct EquivalenceWitness {
    /// One of: class, zero_level, level_order, discreteness, f_table.
    std::string item;
    std::int64_t p = 0;
    std::int64_t q = 0;
    int n = 0;
    std::string detail;
};

struct Verdict {
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;
};

/// Bounded decision. Throws UsageError when the invariants were extracted with different bounds.
Verdict equivalent(const TheoryInvariant& first, const TheoryInvariant& second);

enum class Multiplicity { Zero, One, TwoOrMore };

std::string to_string(Multiplicity multiplicity);

struct SpineLevel {
    /// Trailing linear-part blocks of this subgroup; 0 is {0}.
    std::size_t depth = 0;
    /// Primes p | n with H_p equal to this level.
    std::vector<std::int64_t> primes;
    bool a = false;
    bool f = false;
    bool dk = false;
    /// lim dim of p^r C_n(x)/p^{r+1} C_n(x), keyed by p | n.
    std::map<std::int64_t, Multiplicity> beta;
    /// dim of Tor_p(p^k F*)/Tor_p(p^{k+1} F*), keyed by (p, k) with p | n and 0 ≤ k ≤ v_p(n).
    std::map<std::pair<std::int64_t, int>, Multiplicity> alpha;

    friend bool operator==(const SpineLevel&, const SpineLevel&) = default;
};

struct SpineView {
    std::int64_t n = 0;
    /// C_1 = {0} ⊊ C_2 ⊊ … ⊊ C_l.
    std::vector<SpineLevel> chain;
};

/// The n-spine of uw(G) from the H_p levels. Needs n ≥ 2 and a torsion-free divisible nonlinear model.
SpineView spine(const Model& model, std::int64_t n);

/// A linearly ordered partition of a finite prime set, bottom class first.
struct OrderedPartition {
    std::vector<std::vector<std::int64_t>> classes;
    /// H_p = {0} for the bottom class.
    bool bottom_at_zero = true;
    /// G/H_p is discrete for the top class.
    bool top_discrete = false;
    /// Digits for the discrete top class; unlisted primes use the UNIT rule.
    FFamily digits = FFamily::unit();

    std::vector<std::int64_t> primes() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Grammar: [`0 <`] class (`<` class)* [`!discrete` [`(` p `:` d,d,… (`;` p `:` …)* `)`]],
/// with each class a comma-separated list of primes. Throws ParseError.
OrderedPartition parse_partition(const std::string& text);
std::string to_string(const OrderedPartition& partition);

/// Throws ConstructionError for digit violations or a discrete top over several classes.
Model realize_partition(const OrderedPartition& partition);

/// The partition read off an invariant: primes grouped by H_p level, bottom first. Digits of a discrete
/// top class come from the f tables, trailing zeros dropped; UNIT digit lists are left implicit.
/// Throws UsageError unless the invariant is torsion-free nonlinear.
OrderedPartition partition_of(const TheoryInvariant& invariant);

/// The first disagreement between a partition and an invariant extracted on its primes, if any.
std::optional<std::string> partition_mismatch(const OrderedPartition& partition, const TheoryInvariant& invariant);

}  // namespace cog
