#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cog/core/model.hpp"

namespace cog {

/// a·xᵐ = b.
struct EqAtom {
    Element a;
    std::int64_t m = 0;
    Element b;
    friend bool operator==(const EqAtom&, const EqAtom&) = default;
};

/// R(a·xᵐ, b·xⁿ, c·xᵖ).
struct RelAtom {
    Element a;
    std::int64_t m = 0;
    Element b;
    std::int64_t n = 0;
    Element c;
    std::int64_t p = 0;
    friend bool operator==(const RelAtom&, const RelAtom&) = default;
};

using AtomicFormula = std::variant<EqAtom, RelAtom>;

/// A quantifier-free formula in the single variable x.
struct Formula {
    enum class Kind { Atom, Not, And, Or };
    Kind kind = Kind::Atom;
    std::vector<AtomicFormula> atom;  // exactly one entry when kind is Atom
    std::vector<Formula> children;

    static Formula of(AtomicFormula atom);
    static Formula negation(Formula operand);
    static Formula conjunction(Formula left, Formula right);
    static Formula disjunction(Formula left, Formula right);

    friend bool operator==(const Formula&, const Formula&) = default;
};

using Bindings = std::map<std::string, Element>;

/// Grammar: atoms `R(t,t,t)` and `t = t`; terms are `*`-products of `x^k` and bound names (each
/// optionally raised to an integer power); `e` is the identity unless bound; connectives `!`, `&`, `|`
/// and parentheses, with `!` binding tightest and `|` loosest. Throws ParseError.
Formula parse_formula(const Model& model, const std::string& text, const Bindings& bindings);

std::string to_string(const AtomicFormula& atom);
std::string to_string(const Formula& formula);

/// Direct evaluation of the formula at x.
bool evaluate(const Model& model, const Formula& formula, const Element& x);
bool evaluate(const Model& model, const AtomicFormula& atom, const Element& x);

/// R(a, xⁿ, b) with n ≥ 1.
struct RPower {
    Element a;
    std::int64_t n = 1;
    Element b;
};
/// R(a, xᵐ, b·xⁿ) with m > n ≥ 1.
struct RMixed {
    Element a;
    std::int64_t m = 2;
    Element b;
    std::int64_t n = 1;
};
/// a·xⁿ = b with n ≥ 1.
struct Roots {
    Element a;
    std::int64_t n = 1;
    Element b;
};
/// R(a, b, c) with no occurrence of x.
struct TripleConst {
    Element a;
    Element b;
    Element c;
};
/// a = b with no occurrence of x.
struct ConstEq {
    Element a;
    Element b;
};

struct NormalForm {
    std::variant<RPower, RMixed, Roots, TripleConst, ConstEq> form;
    /// The form is stated in x⁻¹; its solution set must be inverted back.
    bool inverted = false;
};

NormalForm normalize(const Model& model, const AtomicFormula& atom);

/// The open arc I(from, to) = {h : R(from, h, to)}; equal endpoints denote the group minus that point.
struct Arc {
    Element from;
    Element to;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// A finite union of singletons and open arcs of a model with a descriptor-form unwound.
///
/// Points are handled through their lifts in [e, z_G). The canonical form is a sorted list of
/// breakpoints with a membership bit for each breakpoint and for each open gap after it; a breakpoint
/// whose bit matches both neighbouring gaps is dropped.
class IntervalUnion {
public:
    static IntervalUnion empty(const Model& model);
    static IntervalUnion full(const Model& model);
    static IntervalUnion singleton(const Model& model, const Element& g);
    static IntervalUnion arc(const Model& model, const Element& from, const Element& to);

    bool is_empty() const { return points_.empty() && !whole_; }
    bool is_full() const { return points_.empty() && whole_; }
    bool contains(const Element& g) const;

    IntervalUnion complement() const;
    IntervalUnion unite(const IntervalUnion& other) const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    /// Image under x ↦ x⁻¹.
    IntervalUnion inverted() const;

    /// Isolated points, sorted from e.
    std::vector<Element> singletons() const;
    /// Maximal open arcs, sorted by starting point from e.
    std::vector<Arc> arcs() const;
    std::string describe() const;

    const Model& model() const;

    /// Structural equality of the canonical forms.
    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.points_ == b.points_ && a.point_in_ == b.point_in_ && a.gap_in_ == b.gap_in_ &&
               a.whole_ == b.whole_;
    }

    struct Frame;
    /// Builds from lifts in [e, z_G): each piece is an interval with an optional closed lower end.
    struct Piece {
        LinearValue low;
        bool low_closed = false;
        LinearValue high;
    };
    static IntervalUnion from_pieces(const Model& model, const std::vector<Piece>& pieces);
    /// Lift of an element in [e, z_G).
    LinearValue lift(const Element& g) const;

private:
    explicit IntervalUnion(std::shared_ptr<const Frame> frame) : frame_(std::move(frame)) {}

    bool member_at(const LinearValue& position) const;
    bool gap_after(const LinearValue& position) const;
    IntervalUnion combine(const IntervalUnion& other, bool (*op)(bool, bool)) const;
    void canonicalize();

    std::shared_ptr<const Frame> frame_;
    std::vector<LinearValue> points_;
    std::vector<bool> point_in_;
    /// gap_in_[i] covers the open gap after points_[i], the last one wrapping past e.
    std::vector<bool> gap_in_;
    bool whole_ = false;
};

/// Abelian, divisible and with torsion. Throws UnsupportedError when undecidable.
bool is_c_divisible(const Model& model);

/// Each throws DomainError unless the model is c-divisible.
IntervalUnion solve_R_power(const Model& model, const Element& a, std::int64_t n, const Element& b);
IntervalUnion solve_R_mixed(const Model& model, const Element& a, std::int64_t m, const Element& b,
                            std::int64_t n);
IntervalUnion solve_roots(const Model& model, const Element& a, std::int64_t n, const Element& b);
IntervalUnion solve(const Model& model, const AtomicFormula& atom);
IntervalUnion solve(const Model& model, const Formula& formula);

struct VerifyMode {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::int64_t grid = 0;
    std::int64_t count = 0;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive(std::int64_t grid) { return {Kind::Exhaustive, grid, 0, 0}; }
    static VerifyMode sampled(std::int64_t count, std::uint64_t seed) { return {Kind::Sampled, 0, count, seed}; }
};

struct Mismatch {
    Element x;
    bool direct = false;
    bool member = false;
};

struct VerifyReport {
    std::int64_t checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// The exhaustive grid: the points k·z_G/N of [e, z_G) and, with a tail, their neighbours shifted by
/// ± the unit of the first tail coordinate.
std::vector<Element> oracle_grid(const Model& model, std::int64_t modulus);

/// An N such that the grid at N and its refinements resolve every endpoint of the formula's solution:
/// twice the lcm of the coefficients' turn denominators and of the exponents and their differences.
/// Needs a rational-angle circle base; throws UsageError otherwise.
std::int64_t oracle_modulus(const Model& model, const Formula& formula);

VerifyReport verify_solution(const Model& model, const Formula& formula, const IntervalUnion& solution,
                             const VerifyMode& mode);

enum class MinimalityClass { CyclicallyMinimal, WeaklyCyclicallyMinimalOnly, Neither };

std::string to_string(MinimalityClass tag);

struct MinimalityVerdict {
    MinimalityClass tag = MinimalityClass::Neither;
    std::string evidence;
};

/// Structural decision from divisibility, torsion and the linear part.
MinimalityVerdict minimality_class(const Model& model);

}  // namespace cog
