#include "cog/solver/solver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cog/arith/rational.hpp"
#include "cog/core/sampling.hpp"
#include "cog/error.hpp"
#include "cog/structure/structure.hpp"
#include "cog/unwound/unwound.hpp"
#include "cog/util/overloaded.hpp"

namespace cog {

// ---------------------------------------------------------------------------------------------
// Formulas

Formula Formula::of(AtomicFormula atom) {
    Formula out;
    out.kind = Kind::Atom;
    out.atom.push_back(std::move(atom));
    return out;
}

Formula Formula::negation(Formula operand) {
    Formula out;
    out.kind = Kind::Not;
    out.children.push_back(std::move(operand));
    return out;
}

Formula Formula::conjunction(Formula left, Formula right) {
    Formula out;
    out.kind = Kind::And;
    out.children.push_back(std::move(left));
    out.children.push_back(std::move(right));
    return out;
}

Formula Formula::disjunction(Formula left, Formula right) {
    Formula out;
    out.kind = Kind::Or;
    out.children.push_back(std::move(left));
    out.children.push_back(std::move(right));
    return out;
}

namespace {

bool is_zero_coordinate(const Element& g) {
    bool base_zero = std::visit(Overloaded{
                                    [](const Residue& r) { return r.value == 0; },
                                    [](const Angle& a) { return a.is_zero(); },
                                    [](const Rat& x) { return x == 0; },
                                    [](const LinearValue& v) { return v.is_zero(); },
                                },
                                g.base);
    return base_zero && g.tail.is_zero();
}

std::string term_string(const Element& coefficient, std::int64_t exponent) {
    if (exponent == 0) {
        return to_string(coefficient);
    }
    std::string power = exponent == 1 ? "x" : "x^" + std::to_string(exponent);
    return is_zero_coordinate(coefficient) ? power : to_string(coefficient) + "*" + power;
}

}  // namespace

std::string to_string(const AtomicFormula& atom) {
    return std::visit(
        Overloaded{
            [](const EqAtom& eq) { return term_string(eq.a, eq.m) + " = " + to_string(eq.b); },
            [](const RelAtom& rel) {
                return "R(" + term_string(rel.a, rel.m) + ", " + term_string(rel.b, rel.n) + ", " +
                       term_string(rel.c, rel.p) + ")";
            },
        },
        atom);
}

std::string to_string(const Formula& formula) {
    switch (formula.kind) {
        case Formula::Kind::Atom:
            return to_string(formula.atom.front());
        case Formula::Kind::Not:
            return "!(" + to_string(formula.children[0]) + ")";
        case Formula::Kind::And:
            return "(" + to_string(formula.children[0]) + " & " + to_string(formula.children[1]) + ")";
        case Formula::Kind::Or:
            return "(" + to_string(formula.children[0]) + " | " + to_string(formula.children[1]) + ")";
    }
    throw std::logic_error("unknown formula kind");
}

namespace {

class FormulaParser {
public:
    FormulaParser(const Model& model, const std::string& text, const Bindings& bindings)
        : model_(model), text_(text), bindings_(bindings) {}

    Formula parse() {
        Formula out = disjunction();
        skip();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return out;
    }

private:
    struct Term {
        Element coefficient;
        std::int64_t exponent = 0;
    };

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    Formula disjunction() {
        Formula out = conjunction();
        while (peek() == '|') {
            ++pos_;
            out = Formula::disjunction(std::move(out), conjunction());
        }
        return out;
    }

    Formula conjunction() {
        Formula out = unary();
        while (peek() == '&') {
            ++pos_;
            out = Formula::conjunction(std::move(out), unary());
        }
        return out;
    }

    Formula unary() {
        char c = peek();
        if (c == '!') {
            ++pos_;
            return Formula::negation(unary());
        }
        if (c == '(') {
            ++pos_;
            Formula inner = disjunction();
            expect(')');
            return inner;
        }
        return atom();
    }

    bool at_relation() {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != 'R') {
            return false;
        }
        std::size_t next = pos_ + 1;
        while (next < text_.size() && std::isspace(static_cast<unsigned char>(text_[next]))) {
            ++next;
        }
        return next < text_.size() && text_[next] == '(';
    }

    Formula atom() {
        if (at_relation()) {
            ++pos_;
            expect('(');
            Term first = term();
            expect(',');
            Term second = term();
            expect(',');
            Term third = term();
            expect(')');
            return Formula::of(RelAtom{first.coefficient, first.exponent, second.coefficient, second.exponent,
                                       third.coefficient, third.exponent});
        }
        Term left = term();
        expect('=');
        Term right = term();
        // a·xᵐ = b·xⁿ ⇔ a·x^(m−n) = b.
        return Formula::of(EqAtom{left.coefficient, left.exponent - right.exponent, right.coefficient});
    }

    Term term() {
        Term out{model_.identity(), 0};
        factor(out);
        while (peek() == '*') {
            ++pos_;
            factor(out);
        }
        return out;
    }

    void factor(Term& out) {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected a name or x", pos_);
        }
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name = text_.substr(start, pos_ - start);
        std::int64_t power = 1;
        if (peek() == '^') {
            ++pos_;
            power = integer();
        }
        if (name == "x") {
            out.exponent += power;
            return;
        }
        auto found = bindings_.find(name);
        Element value;
        if (found != bindings_.end()) {
            value = found->second;
        } else if (name == "e") {
            value = model_.identity();
        } else {
            throw ParseError("unbound coefficient '" + name + "'", start);
        }
        out.coefficient = model_.add(out.coefficient, model_.multiple(value, Int(power)));
    }

    std::int64_t integer() {
        bool parenthesized = peek() == '(';
        if (parenthesized) {
            ++pos_;
        }
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 9) {
            throw ParseError("expected an exponent", start);
        }
        std::int64_t value = std::stoll(text_.substr(start, pos_ - start));
        if (parenthesized) {
            expect(')');
        }
        return negative ? -value : value;
    }

    const Model& model_;
    const std::string& text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const Model& model, const std::string& text, const Bindings& bindings) {
    for (const auto& [name, value] : bindings) {
        if (!model.contains(value)) {
            throw DomainError("binding '" + name + "' is not an element of " + model.describe());
        }
    }
    return FormulaParser(model, text, bindings).parse();
}

bool evaluate(const Model& model, const AtomicFormula& atom, const Element& x) {
    auto term = [&](const Element& coefficient, std::int64_t exponent) {
        return model.add(coefficient, model.multiple(x, Int(exponent)));
    };
    return std::visit(Overloaded{
                          [&](const EqAtom& eq) { return term(eq.a, eq.m) == eq.b; },
                          [&](const RelAtom& rel) {
                              return model.relation(term(rel.a, rel.m), term(rel.b, rel.n), term(rel.c, rel.p));
                          },
                      },
                      atom);
}

bool evaluate(const Model& model, const Formula& formula, const Element& x) {
    switch (formula.kind) {
        case Formula::Kind::Atom:
            return evaluate(model, formula.atom.front(), x);
        case Formula::Kind::Not:
            return !evaluate(model, formula.children[0], x);
        case Formula::Kind::And:
            return evaluate(model, formula.children[0], x) && evaluate(model, formula.children[1], x);
        case Formula::Kind::Or:
            return evaluate(model, formula.children[0], x) || evaluate(model, formula.children[1], x);
    }
    throw std::logic_error("unknown formula kind");
}

// ---------------------------------------------------------------------------------------------
// Normal forms

NormalForm normalize(const Model& model, const AtomicFormula& atom) {
    auto minus = [&](const Element& u, const Element& v) { return model.subtract(u, v); };
    // R(A, x^k, B) for any k ≠ 0; a negative k is R(A, (x⁻¹)^(−k), B) in the inverted variable.
    auto power = [&](const Element& a, std::int64_t k, const Element& b) {
        return NormalForm{RPower{a, k > 0 ? k : -k, b}, k < 0};
    };
    return std::visit(
        Overloaded{
            [&](const EqAtom& eq) -> NormalForm {
                if (eq.m == 0) {
                    return {ConstEq{eq.a, eq.b}, false};
                }
                // a·xᵐ = b with m < 0 is a·(x⁻¹)^(−m) = b.
                return {Roots{eq.a, eq.m > 0 ? eq.m : -eq.m, eq.b}, eq.m < 0};
            },
            [&](const RelAtom& rel) -> NormalForm {
                const auto& [a, m, b, n, c, p] = rel;
                if (m == n && n == p) {
                    return {TripleConst{a, b, c}, false};
                }
                // Two equal exponents: R(u·xʲ, v·xʲ, w·xⁱ) ⇔ R(v·w⁻¹, x^(i−j), u·w⁻¹), after a rotation.
                if (m == n) {
                    return power(minus(b, c), p - m, minus(a, c));
                }
                if (n == p) {
                    return power(minus(c, a), m - n, minus(b, a));
                }
                if (p == m) {
                    return power(minus(a, b), n - m, minus(c, b));
                }
                // Rotate the least exponent first, then shift it away:
                // R(u·xⁱ, v·xʲ, w·xᵏ) ⇔ R(u·v⁻¹, x^(j−i), w·v⁻¹·x^(k−i)).
                std::vector<std::pair<Element, std::int64_t>> terms{{a, m}, {b, n}, {c, p}};
                auto least = std::min_element(terms.begin(), terms.end(),
                                              [](const auto& s, const auto& t) { return s.second < t.second; });
                std::rotate(terms.begin(), least, terms.end());
                Element first = minus(terms[0].first, terms[1].first);
                Element second = minus(terms[2].first, terms[1].first);
                std::int64_t high = terms[1].second - terms[0].second;
                std::int64_t low = terms[2].second - terms[0].second;
                if (high > low) {
                    return {RMixed{first, high, second, low}, false};
                }
                // R(A, xᴹ, B·xᴺ) with M < N ⇔ R(B·A⁻¹, (x⁻¹)ᴺ, B·(x⁻¹)ᴹ).
                return {RMixed{minus(second, first), low, second, high}, true};
            },
        },
        atom);
}

// ---------------------------------------------------------------------------------------------
// Interval unions

struct IntervalUnion::Frame {
    Model model;
    LinearValue z;
};

namespace {

std::shared_ptr<const IntervalUnion::Frame> make_frame(const Model& model) {
    auto descriptor = unwound_descriptor(model);
    if (!descriptor) {
        throw UnsupportedError("interval unions need a descriptor-form unwound; " + model.describe() +
                               " has none");
    }
    return std::make_shared<const IntervalUnion::Frame>(IntervalUnion::Frame{model, descriptor->z});
}

LinearValue divide(const LinearValue& value, std::int64_t n) { return value.divided(Quad(Rat(n))); }

LinearValue times(const LinearValue& value, std::int64_t k) { return value.scaled(Quad(Rat(k))); }

}  // namespace

const Model& IntervalUnion::model() const { return frame_->model; }

LinearValue IntervalUnion::lift(const Element& g) const {
    return to_unwound_coordinates(frame_->model, UnwoundElement{Int(0), g});
}

IntervalUnion IntervalUnion::empty(const Model& model) { return IntervalUnion(make_frame(model)); }

IntervalUnion IntervalUnion::full(const Model& model) {
    IntervalUnion out(make_frame(model));
    out.whole_ = true;
    return out;
}

IntervalUnion IntervalUnion::singleton(const Model& model, const Element& g) {
    IntervalUnion out(make_frame(model));
    model.require(g);
    out.points_.push_back(out.lift(g));
    out.point_in_.push_back(true);
    out.gap_in_.push_back(false);
    return out;
}

IntervalUnion IntervalUnion::arc(const Model& model, const Element& from, const Element& to) {
    IntervalUnion probe(make_frame(model));
    model.require(from);
    model.require(to);
    const LinearValue start = probe.lift(from);
    const LinearValue end = probe.lift(to);
    if (start == end) {
        return singleton(model, from).complement();
    }
    const LinearValue zero = LinearValue::zero(start.size());
    if (start < end) {
        return from_pieces(model, {{start, false, end}});
    }
    std::vector<Piece> pieces{{start, false, probe.frame_->z}};
    if (zero < end) {
        pieces.push_back({zero, true, end});
    }
    return from_pieces(model, pieces);
}

IntervalUnion IntervalUnion::from_pieces(const Model& model, const std::vector<Piece>& pieces) {
    IntervalUnion out = empty(model);
    const LinearValue& z = out.frame_->z;
    const LinearValue zero = LinearValue::zero(z.size());
    for (const auto& piece : pieces) {
        if (piece.low < zero || z < piece.high || !(piece.low < piece.high)) {
            throw std::logic_error("interval piece outside [e, z)");
        }
        IntervalUnion single(out.frame_);
        std::vector<std::pair<LinearValue, std::pair<bool, bool>>> marks;  // position, (point, gap after)
        marks.push_back({piece.low, {piece.low_closed, true}});
        if (piece.high < z) {
            marks.push_back({piece.high, {false, false}});
        } else if (piece.low != zero) {
            marks.push_back({zero, {false, false}});
        }
        std::sort(marks.begin(), marks.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
        for (auto& [position, bits] : marks) {
            single.points_.push_back(position);
            single.point_in_.push_back(bits.first);
            single.gap_in_.push_back(bits.second);
        }
        single.canonicalize();
        out = out.unite(single);
    }
    return out;
}

bool IntervalUnion::member_at(const LinearValue& position) const {
    if (points_.empty()) {
        return whole_;
    }
    auto it = std::upper_bound(points_.begin(), points_.end(), position);
    if (it == points_.begin()) {
        return gap_in_.back();
    }
    auto index = static_cast<std::size_t>(it - points_.begin()) - 1;
    return points_[index] == position ? point_in_[index] : gap_in_[index];
}

bool IntervalUnion::gap_after(const LinearValue& position) const {
    if (points_.empty()) {
        return whole_;
    }
    auto it = std::upper_bound(points_.begin(), points_.end(), position);
    if (it == points_.begin()) {
        return gap_in_.back();
    }
    return gap_in_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

void IntervalUnion::canonicalize() {
    bool changed = true;
    while (changed && !points_.empty()) {
        changed = false;
        const std::size_t count = points_.size();
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t previous = (i + count - 1) % count;
            if (point_in_[i] == gap_in_[i] && gap_in_[i] == gap_in_[previous]) {
                if (count == 1) {
                    whole_ = gap_in_[0];
                }
                const auto offset = static_cast<long>(i);
                points_.erase(points_.begin() + offset);
                point_in_.erase(point_in_.begin() + offset);
                gap_in_.erase(gap_in_.begin() + offset);
                changed = true;
                break;
            }
        }
    }
    if (!points_.empty()) {
        whole_ = false;
    }
}

bool IntervalUnion::contains(const Element& g) const {
    frame_->model.require(g);
    return member_at(lift(g));
}

IntervalUnion IntervalUnion::complement() const {
    IntervalUnion out = *this;
    out.point_in_.flip();
    out.gap_in_.flip();
    out.whole_ = points_.empty() && !whole_;
    return out;
}

IntervalUnion IntervalUnion::combine(const IntervalUnion& other, bool (*op)(bool, bool)) const {
    if (!(frame_->model == other.frame_->model)) {
        throw UsageError("interval unions over different models");
    }
    IntervalUnion out(frame_);
    std::vector<LinearValue> merged;
    std::merge(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (const auto& position : merged) {
        out.points_.push_back(position);
        out.point_in_.push_back(op(member_at(position), other.member_at(position)));
        out.gap_in_.push_back(op(gap_after(position), other.gap_after(position)));
    }
    out.whole_ = merged.empty() && op(whole_, other.whole_);
    out.canonicalize();
    return out;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    return combine(other, [](bool s, bool t) { return s || t; });
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    return combine(other, [](bool s, bool t) { return s && t; });
}

IntervalUnion IntervalUnion::inverted() const {
    IntervalUnion out(frame_);
    out.whole_ = whole_;
    const std::size_t count = points_.size();
    std::vector<std::pair<LinearValue, std::pair<bool, bool>>> marks;
    for (std::size_t j = 0; j < count; ++j) {
        LinearValue image = points_[j].is_zero() ? points_[j] : frame_->z - points_[j];
        // The gap after −b_j is the image of the gap before b_j.
        marks.push_back({std::move(image), {point_in_[j], gap_in_[(j + count - 1) % count]}});
    }
    std::sort(marks.begin(), marks.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
    for (auto& [position, bits] : marks) {
        out.points_.push_back(position);
        out.point_in_.push_back(bits.first);
        out.gap_in_.push_back(bits.second);
    }
    out.canonicalize();
    return out;
}

std::vector<Element> IntervalUnion::singletons() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (point_in_[i]) {
            out.push_back(from_unwound_coordinates(frame_->model, points_[i]).g);
        }
    }
    return out;
}

std::vector<Arc> IntervalUnion::arcs() const {
    std::vector<Arc> out;
    const std::size_t count = points_.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (gap_in_[i]) {
            out.push_back({from_unwound_coordinates(frame_->model, points_[i]).g,
                           from_unwound_coordinates(frame_->model, points_[(i + 1) % count]).g});
        }
    }
    return out;
}

std::string IntervalUnion::describe() const {
    if (is_empty()) {
        return "Empty";
    }
    if (is_full()) {
        return "Full";
    }
    std::vector<std::string> parts;
    for (const auto& g : singletons()) {
        parts.push_back("{" + to_string(g) + "}");
    }
    for (const auto& arc : arcs()) {
        if (arc.from == arc.to) {
            parts.push_back("Full \\ {" + to_string(arc.from) + "}");
        } else {
            parts.push_back("I(" + to_string(arc.from) + ", " + to_string(arc.to) + ")");
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out << (i == 0 ? "" : " ∪ ") << parts[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------------------------
// Solving

bool is_c_divisible(const Model& model) { return has_torsion(model) && is_divisible(model); }

namespace {

void require_c_divisible(const Model& model) {
    if (!is_c_divisible(model)) {
        throw DomainError(model.describe() + " is not c-divisible (divisible with torsion)");
    }
}

void require_exponent(std::int64_t n, std::int64_t least, const char* name) {
    if (n < least) {
        throw UsageError(std::string("exponent ") + name + " must be at least " + std::to_string(least) +
                         ", got " + std::to_string(n));
    }
}

struct Bound {
    LinearValue value;
    bool closed = false;
};

// {y ∈ [0, z) : y above every lower bound and strictly below every upper bound}, as a piece if nonempty.
void add_piece(std::vector<IntervalUnion::Piece>& pieces, const LinearValue& z, std::vector<Bound> lowers,
               std::vector<LinearValue> uppers) {
    lowers.push_back({LinearValue::zero(z.size()), true});
    uppers.push_back(z);
    Bound low = lowers.front();
    for (const auto& bound : lowers) {
        if (low.value < bound.value) {
            low = bound;
        } else if (bound.value == low.value) {
            low.closed = low.closed && bound.closed;
        }
    }
    LinearValue high = *std::min_element(uppers.begin(), uppers.end());
    if (low.value < high) {
        pieces.push_back({low.value, low.closed, high});
    }
}

// The open arc from lo to hi in the unwound, for 0 ≤ lo < z and lo < hi ≤ lo + z, projected to [0, z).
void add_wrapped_arc(std::vector<IntervalUnion::Piece>& pieces, const LinearValue& z, const LinearValue& lo,
                     const LinearValue& hi) {
    if (!(z < hi)) {
        pieces.push_back({lo, false, hi});
        return;
    }
    pieces.push_back({lo, false, z});
    if (!(hi - z).is_zero()) {
        pieces.push_back({LinearValue::zero(z.size()), true, hi - z});
    }
}

}  // namespace

IntervalUnion solve_R_power(const Model& model, const Element& a, std::int64_t n, const Element& b) {
    require_c_divisible(model);
    require_exponent(n, 1, "n");
    model.require(a);
    model.require(b);
    IntervalUnion frame = IntervalUnion::empty(model);
    if (a == b) {
        return frame;
    }
    const LinearValue z = to_unwound_coordinates(model, {Int(1), model.identity()});
    const LinearValue a_lift = frame.lift(a);
    const LinearValue b_lift = frame.lift(b);
    // xⁿ ∈ I(a, b) with y = lift(x): y·n − k·z runs over the arc from a′ to b′, one turn per k.
    std::vector<IntervalUnion::Piece> pieces;
    for (std::int64_t k = 0; k < n; ++k) {
        LinearValue lo = divide(a_lift + times(z, k), n);
        LinearValue hi = a_lift < b_lift ? divide(b_lift + times(z, k), n) : divide(b_lift + times(z, k + 1), n);
        add_wrapped_arc(pieces, z, lo, hi);
    }
    return IntervalUnion::from_pieces(model, pieces);
}

IntervalUnion solve_R_mixed(const Model& model, const Element& a, std::int64_t m, const Element& b,
                            std::int64_t n) {
    require_c_divisible(model);
    require_exponent(n, 1, "n");
    if (m <= n) {
        throw UsageError("R(a, x^m, b·x^n) needs m > n; normalize first");
    }
    model.require(a);
    model.require(b);
    IntervalUnion frame = IntervalUnion::empty(model);
    const LinearValue z = to_unwound_coordinates(model, {Int(1), model.identity()});
    const LinearValue a_lift = frame.lift(a);
    const LinearValue b_lift = frame.lift(b);
    // With y = lift(x), v = m·y − k·z and w = b′ + n·y − l·z are the lifts of xᵐ and b·xⁿ for the unique
    // k ∈ [0, m) and l ∈ [0, n] putting them in [0, z). R(a, v, w) holds in one of three rotations:
    // a′ < v < w, v < w < a′, or w < a′ < v. Each is a bounded interval of y.
    std::vector<IntervalUnion::Piece> pieces;
    for (std::int64_t k = 0; k < m; ++k) {
        for (std::int64_t l = 0; l <= n; ++l) {
            const LinearValue a_root = divide(a_lift + times(z, k), m);              // v > a′
            const LinearValue unit_root = divide(times(z, k), m);                   // v ≥ 0
            const LinearValue next_unit_root = divide(times(z, k + 1), m);          // v < z
            const LinearValue v_below_w = divide(b_lift + times(z, k - l), m - n);  // v < w
            const LinearValue w_floor = divide(times(z, l) - b_lift, n);            // w ≥ 0
            const LinearValue w_below_z = divide(times(z, l + 1) - b_lift, n);      // w < z
            const LinearValue w_below_a = divide(a_lift - b_lift + times(z, l), n); // w < a′
            add_piece(pieces, z, {{a_root, false}}, {v_below_w, w_below_z});
            add_piece(pieces, z, {{unit_root, true}}, {v_below_w, w_below_a});
            add_piece(pieces, z, {{w_floor, true}, {a_root, false}}, {w_below_a, next_unit_root});
        }
    }
    return IntervalUnion::from_pieces(model, pieces);
}

IntervalUnion solve_roots(const Model& model, const Element& a, std::int64_t n, const Element& b) {
    require_c_divisible(model);
    require_exponent(n, 1, "n");
    model.require(a);
    model.require(b);
    IntervalUnion out = IntervalUnion::empty(model);
    const LinearValue z = to_unwound_coordinates(model, {Int(1), model.identity()});
    const LinearValue target = out.lift(model.subtract(b, a));
    for (std::int64_t k = 0; k < n; ++k) {
        Element root = from_unwound_coordinates(model, divide(target + times(z, k), n)).g;
        out = out.unite(IntervalUnion::singleton(model, root));
    }
    return out;
}

IntervalUnion solve(const Model& model, const AtomicFormula& atom) {
    require_c_divisible(model);
    NormalForm normal = normalize(model, atom);
    IntervalUnion out = std::visit(
        Overloaded{
            [&](const RPower& form) { return solve_R_power(model, form.a, form.n, form.b); },
            [&](const RMixed& form) { return solve_R_mixed(model, form.a, form.m, form.b, form.n); },
            [&](const Roots& form) { return solve_roots(model, form.a, form.n, form.b); },
            [&](const TripleConst& form) {
                return model.relation(form.a, form.b, form.c) ? IntervalUnion::full(model)
                                                              : IntervalUnion::empty(model);
            },
            [&](const ConstEq& form) {
                return form.a == form.b ? IntervalUnion::full(model) : IntervalUnion::empty(model);
            },
        },
        normal.form);
    return normal.inverted ? out.inverted() : out;
}

IntervalUnion solve(const Model& model, const Formula& formula) {
    switch (formula.kind) {
        case Formula::Kind::Atom:
            return solve(model, formula.atom.front());
        case Formula::Kind::Not:
            return solve(model, formula.children[0]).complement();
        case Formula::Kind::And:
            return solve(model, formula.children[0]).intersect(solve(model, formula.children[1]));
        case Formula::Kind::Or:
            return solve(model, formula.children[0]).unite(solve(model, formula.children[1]));
    }
    throw std::logic_error("unknown formula kind");
}

// ---------------------------------------------------------------------------------------------
// Oracles

std::vector<Element> oracle_grid(const Model& model, std::int64_t modulus) {
    if (modulus < 1) {
        throw UsageError("oracle grid modulus must be positive");
    }
    auto descriptor = unwound_descriptor(model);
    if (!descriptor) {
        throw UnsupportedError("no oracle grid for " + model.describe());
    }
    const LinearValue& z = descriptor->z;
    std::vector<Element> out;
    for (std::int64_t k = 0; k < modulus; ++k) {
        const LinearValue position = divide(times(z, k), modulus);
        out.push_back(from_unwound_coordinates(model, position).g);
        if (model.has_tail()) {
            const LinearValue shift = LinearValue::unit(z.size(), z.size() - model.tail().size());
            out.push_back(from_unwound_coordinates(model, position + shift).g);
            out.push_back(from_unwound_coordinates(model, position - shift).g);
        }
    }
    return out;
}

namespace {

void collect(const Formula& formula, std::vector<const AtomicFormula*>& atoms) {
    if (formula.kind == Formula::Kind::Atom) {
        atoms.push_back(&formula.atom.front());
    }
    for (const auto& child : formula.children) {
        collect(child, atoms);
    }
}

}  // namespace

std::int64_t oracle_modulus(const Model& model, const Formula& formula) {
    const auto* circle = std::get_if<CircleSubgroup>(&model.base());
    if (circle == nullptr || circle->kind != CircleSubgroup::Kind::Rational) {
        throw UsageError("exhaustive oracles need a rational-angle circle base");
    }
    // Normal-form coefficients are differences of the given ones and normal-form exponents are
    // differences of the given exponents, so every endpoint lies in (1/(D·E))·z with D the lcm of the
    // turn denominators and E the lcm of the exponent differences. Doubling adds every midpoint.
    std::int64_t denominators = 1;
    std::int64_t exponents = 1;
    auto absorb_element = [&](const Element& g) {
        denominators = lcm64(denominators, to_i64(std::get<Angle>(g.base).rat_part().get_den()));
    };
    auto absorb_exponent = [&](std::int64_t value) {
        if (value != 0) {
            exponents = lcm64(exponents, value < 0 ? -value : value);
        }
    };
    std::vector<const AtomicFormula*> atoms;
    collect(formula, atoms);
    for (const auto* atom : atoms) {
        std::visit(Overloaded{
                       [&](const EqAtom& eq) {
                           absorb_element(eq.a);
                           absorb_element(eq.b);
                           absorb_exponent(eq.m);
                       },
                       [&](const RelAtom& rel) {
                           absorb_element(rel.a);
                           absorb_element(rel.b);
                           absorb_element(rel.c);
                           absorb_exponent(rel.m - rel.n);
                           absorb_exponent(rel.n - rel.p);
                           absorb_exponent(rel.p - rel.m);
                       },
                   },
                   *atom);
    }
    return 2 * denominators * exponents;
}

VerifyReport verify_solution(const Model& model, const Formula& formula, const IntervalUnion& solution,
                             const VerifyMode& mode) {
    std::vector<Element> points;
    if (mode.kind == VerifyMode::Kind::Exhaustive) {
        points = oracle_grid(model, mode.grid);
    } else {
        Rng rng(mode.seed);
        for (std::int64_t i = 0; i < mode.count; ++i) {
            points.push_back(sample_element(model, rng, 100));
        }
    }
    VerifyReport report;
    for (const auto& x : points) {
        bool direct = evaluate(model, formula, x);
        bool member = solution.contains(x);
        ++report.checked;
        if (direct != member) {
            report.mismatches.push_back({x, direct, member});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------------------------
// Minimality

std::string to_string(MinimalityClass tag) {
    switch (tag) {
        case MinimalityClass::CyclicallyMinimal:
            return "cyclically_minimal";
        case MinimalityClass::WeaklyCyclicallyMinimalOnly:
            return "weakly_cyclically_minimal_only";
        case MinimalityClass::Neither:
            return "neither";
    }
    throw std::logic_error("unknown minimality class");
}

namespace {

// |G/l(G)| when finite: the base is finite cyclic, a finite circle subgroup, or wound round ℤ ⃗× ….
std::optional<Int> finite_quotient_order(const Model& model) {
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) -> std::optional<Int> { return Int(m.n); },
            [](const CircleSubgroup& m) -> std::optional<Int> {
                if (m.kind != CircleSubgroup::Kind::Generated) {
                    return std::nullopt;
                }
                auto order = AngleLattice(m.generators).finite_order();
                return order ? std::optional<Int>(Int(*order)) : std::nullopt;
            },
            [](const QCyclic&) -> std::optional<Int> { return std::nullopt; },
            [](const WoundRound& m) -> std::optional<Int> {
                if (m.gamma[0].kind() != LinearComponent::Kind::Integers) {
                    return std::nullopt;
                }
                return m.z[0].rat().get_num();
            },
        },
        model.base());
}

}  // namespace

MinimalityVerdict minimality_class(const Model& model) {
    const bool divisible = is_divisible(model);
    const bool torsion = has_torsion(model);
    if (divisible && torsion) {
        return {MinimalityClass::CyclicallyMinimal, "abelian, divisible, with torsion"};
    }
    if (is_linear(model)) {
        if (divisible) {
            return {MinimalityClass::WeaklyCyclicallyMinimalOnly, "linear, divisible, torsion-free"};
        }
        return {MinimalityClass::Neither, "linear but not divisible"};
    }
    auto order = finite_quotient_order(model);
    if (order && *order > 1) {
        LinearPartView part = linear_part(model);
        bool divisible_part = !part.trivial();
        for (const auto& block : part.blocks) {
            const auto* component = std::get_if<LinearComponent>(&block.source);
            divisible_part = divisible_part && component != nullptr && component->is_divisible();
        }
        if (divisible_part) {
            return {MinimalityClass::WeaklyCyclicallyMinimalOnly,
                    "G/l(G) cyclic of order " + to_string(*order) + " over a divisible l(G) = " + part.describe()};
        }
        return {MinimalityClass::Neither, "G/l(G) finite of order " + to_string(*order) + " but l(G) = " +
                                              part.describe() + " is not infinite divisible"};
    }
    if (!divisible) {
        return {MinimalityClass::Neither, "not divisible, G/l(G) infinite"};
    }
    return {MinimalityClass::Neither, "divisible and torsion-free but not linear"};
}

}  // namespace cog
