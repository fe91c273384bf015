#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cog/core/model.hpp"

namespace cog {

/// true iff g = e or R(e, g, g²).
bool is_positive(const Model& model, const Element& g);

/// Whether the cyclic order is the one induced by a linear order.
bool is_linear(const Model& model);

/// The linear part of a θ = 0 order on ℚ: {x : angle of x is 0}.
struct KernelBlock {
    FFamily family;
    friend bool operator==(const KernelBlock&, const KernelBlock&) = default;
};

/// One archimedean layer of the linear part, most significant first.
struct LinearBlock {
    std::variant<LinearComponent, KernelBlock> source;

    bool divisible_by(std::int64_t p) const;
    bool is_discrete() const;
    std::string describe() const;
};

/// Structural view of l(G) as a lexicographic stack of archimedean blocks.
struct LinearPartView {
    enum class Kind { Trivial, Blocks, WholeGroup };
    Kind kind = Kind::Trivial;
    std::vector<LinearBlock> blocks;

    bool trivial() const { return kind == Kind::Trivial; }
    std::string describe() const;
};

LinearPartView linear_part(const Model& model);
bool in_linear_part(const Model& model, const Element& g);

/// U(g): the angle of g modulo the linear part, in turns.
Angle U_of(const Model& model, const Element& g);

struct Discreteness {
    bool discrete = false;
    /// The smallest positive element when discrete.
    std::optional<Element> unit;
};

Discreteness is_discrete(const Model& model);

/// Least n ≥ 1 with n·g = e, or nullopt when g has infinite order.
std::optional<Int> torsion_order(const Model& model, const Element& g);

bool has_torsion(const Model& model);
bool is_p_divisible(const Model& model, std::int64_t p);
bool is_divisible(const Model& model);

/// H_p as a suffix of the linear-part blocks.
struct HpLevel {
    enum class Kind { Zero, TailIndex, FullLinearPart };
    std::int64_t prime = 0;
    Kind kind = Kind::Zero;
    /// Number of trailing blocks in H_p.
    std::size_t depth = 0;
    /// Number of blocks in l(G).
    std::size_t blocks = 0;

    friend bool operator==(const HpLevel&, const HpLevel&) = default;
};

std::string to_string(HpLevel::Kind kind);

/// Requires a nonlinear torsion-free model; throws UnsupportedError otherwise.
HpLevel H_p_level(const Model& model, std::int64_t p);

bool in_H_p(const Model& model, const HpLevel& level, const Element& g);

/// Whether G/H_p is discrete.
bool quotient_is_discrete(const Model& model, const HpLevel& level);

/// An element whose class is the smallest positive element of G/H_p. Throws DomainError when G/H_p is dense.
Element quotient_unit(const Model& model, const HpLevel& level);

/// The unique h with n·h = g in a torsion-free model, if it exists.
std::optional<Element> divide(const Model& model, const Element& g, const Int& n);

/// argbound_n(g): R(0,g,…,ng) and not R(0,g,…,(n+1)g). Throws UsageError for n = 0.
bool argbound(const Model& model, const Element& g, std::int64_t n);

/// The angular characterization of argbound_n for nonlinear models.
bool argbound_semantic(const Model& model, const Element& g, std::int64_t n);

/// C(h, H) in a finite model: the largest c-convex subset of H through h.
/// Throws PreconditionError when h ∉ H.
std::vector<Element> c_convex_component(const Model& model, const std::vector<Element>& subset,
                                        const Element& h);

/// Whether a subset of a finite model is c-convex.
bool is_c_convex(const Model& model, const std::vector<Element>& subset);

/// "∃h (R(0,h,g,−g) or R(−g,g,h,0)) and p·h = g" in a torsion-free model.
bool divisible_in_short_arc(const Model& model, const Element& g, std::int64_t p);

/// Bounded search for g with U(g) in the open arc (from, to) satisfying the short-arc predicate
/// (or its negation). Only rational carriers of bounded height are searched; nullopt is inconclusive.
std::optional<Element> witness_in_interval(const Model& model, std::int64_t p, bool want_divisible,
                                           const Angle& from, const Angle& to, std::int64_t height);

}  // namespace cog
