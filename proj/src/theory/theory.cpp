#include "cog/theory/theory.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cog/core/relation.hpp"
#include "cog/error.hpp"
#include "cog/qorders/characteristic.hpp"
#include "cog/structure/structure.hpp"
#include "cog/unwound/unwound.hpp"

namespace cog {

std::string to_string(TheoryClass tag) {
    switch (tag) {
        case TheoryClass::Linear:
            return "Linear";
        case TheoryClass::CDivisible:
            return "CDivisible";
        case TheoryClass::TorsionFreeNonlinear:
            return "TorsionFreeNonlinear";
    }
    return "?";
}

std::string to_string(LevelRelation relation) {
    switch (relation) {
        case LevelRelation::Below:
            return "subset";
        case LevelRelation::Equal:
            return "equal";
        case LevelRelation::Above:
            return "superset";
    }
    return "?";
}

std::string to_string(Multiplicity multiplicity) {
    switch (multiplicity) {
        case Multiplicity::Zero:
            return "0";
        case Multiplicity::One:
            return "1";
        case Multiplicity::TwoOrMore:
            return ">=2";
    }
    return "?";
}

Classification classify(const Model& model) {
    if (!is_divisible(model)) {
        throw UnsupportedError("classification needs a divisible model, got " + model.describe());
    }
    if (is_linear(model)) {
        return {TheoryClass::Linear, false, "the cyclic order comes from a linear order"};
    }
    if (has_torsion(model)) {
        for (std::int64_t p = 2;; ++p) {
            if (is_prime(p) && has_p_torsion(model, p)) {
                return {TheoryClass::CDivisible, false,
                        "element of order " + std::to_string(p) + ", so the torsion subgroup is T(U)"};
            }
        }
    }
    bool archimedean = linear_part(model).trivial();
    return {TheoryClass::TorsionFreeNonlinear, archimedean,
            archimedean ? "torsion-free and embeds in the circle" : "torsion-free with linear part " +
                                                                        linear_part(model).describe()};
}

LevelRelation TheoryInvariant::relation(std::size_t i, std::size_t j) const {
    auto a = levels.at(i).depth;
    auto b = levels.at(j).depth;
    if (a < b) {
        return LevelRelation::Below;
    }
    return a == b ? LevelRelation::Equal : LevelRelation::Above;
}

const PrimeInvariant& TheoryInvariant::level(std::int64_t p) const {
    for (const auto& entry : levels) {
        if (entry.prime == p) {
            return entry;
        }
    }
    throw UsageError("prime " + std::to_string(p) + " was not probed");
}

namespace {

void check_primes(const std::vector<std::int64_t>& primes) {
    std::set<std::int64_t> seen;
    for (auto p : primes) {
        if (!is_prime(p)) {
            throw UsageError(std::to_string(p) + " is not a prime");
        }
        if (!seen.insert(p).second) {
            throw UsageError("prime " + std::to_string(p) + " listed twice");
        }
    }
}

}  // namespace

TheoryInvariant extract_invariant(const Model& model, const std::vector<std::int64_t>& primes, int depth) {
    check_primes(primes);
    if (depth < 1) {
        throw UsageError("depth must be positive");
    }
    auto classification = classify(model);
    TheoryInvariant out;
    out.tag = classification.tag;
    out.c_archimedean = classification.c_archimedean;
    out.primes = primes;
    out.depth = depth;
    if (out.tag != TheoryClass::TorsionFreeNonlinear) {
        return out;
    }
    for (auto p : primes) {
        auto level = H_p_level(model, p);
        PrimeInvariant entry;
        entry.prime = p;
        entry.depth = level.depth;
        entry.is_zero = level.kind == HpLevel::Kind::Zero;
        entry.is_linear_part = level.kind == HpLevel::Kind::FullLinearPart;
        entry.discrete = quotient_is_discrete(model, level);
        if (entry.discrete) {
            for (int n = 1; n <= depth; ++n) {
                entry.f_table.push_back(f_G_p(model, p, n));
            }
        }
        out.levels.push_back(std::move(entry));
    }
    return out;
}

Verdict equivalent(const TheoryInvariant& first, const TheoryInvariant& second) {
    if (first.primes != second.primes || first.depth != second.depth) {
        throw UsageError("invariants were extracted with different bounds");
    }
    auto differ = [](EquivalenceWitness witness) { return Verdict{false, std::move(witness)}; };
    if (first.tag != second.tag) {
        return differ({"class", 0, 0, 0, to_string(first.tag) + " vs " + to_string(second.tag)});
    }
    if (first.tag != TheoryClass::TorsionFreeNonlinear) {
        return {true, std::nullopt};
    }
    const auto& primes = first.primes;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& a = first.levels[i];
        const auto& b = second.levels[i];
        if (a.is_zero != b.is_zero) {
            return differ({"zero_level", primes[i], 0, 0,
                           std::string("H_p = {0} ") + (a.is_zero ? "holds" : "fails") + " in the first model only"});
        }
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            auto r1 = first.relation(i, j);
            auto r2 = second.relation(i, j);
            if (r1 != r2) {
                return differ({"level_order", primes[i], primes[j], 0,
                               "H_p " + to_string(r1) + " H_q vs H_p " + to_string(r2) + " H_q"});
            }
        }
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& a = first.levels[i];
        const auto& b = second.levels[i];
        if (a.discrete != b.discrete) {
            return differ({"discreteness", primes[i], 0, 0,
                           std::string("G/H_p is ") + (a.discrete ? "discrete" : "dense") + " in the first model only"});
        }
        for (std::size_t n = 0; n < a.f_table.size(); ++n) {
            if (a.f_table[n] != b.f_table[n]) {
                return differ({"f_table", primes[i], 0, static_cast<int>(n + 1),
                               "f_{G,p}(n) = " + to_string(a.f_table[n]) + " vs " + to_string(b.f_table[n])});
            }
        }
    }
    return {true, std::nullopt};
}

SpineView spine(const Model& model, std::int64_t n) {
    if (n < 2) {
        throw UsageError("the spine needs n >= 2");
    }
    auto classification = classify(model);
    if (classification.tag != TheoryClass::TorsionFreeNonlinear) {
        throw UnsupportedError("the spine needs a torsion-free nonlinear model, got " + to_string(classification.tag));
    }
    auto factors = factorize(n);
    std::vector<HpLevel> levels;
    std::set<std::size_t> depths{0};
    for (auto [p, r] : factors) {
        levels.push_back(H_p_level(model, p));
        depths.insert(levels.back().depth);
    }
    const HpLevel& top =
        *std::max_element(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.depth < b.depth; });
    const bool top_discrete = quotient_is_discrete(model, top);

    SpineView view;
    view.n = n;
    std::vector<std::size_t> chain(depths.begin(), depths.end());
    for (std::size_t j = 0; j < chain.size(); ++j) {
        SpineLevel level;
        level.depth = chain[j];
        const bool last = j + 1 == chain.size();
        // C_{l+1} is the whole unwound, above every H_p.
        auto below_next = [&](std::size_t depth) { return last || depth < chain[j + 1]; };
        for (std::size_t i = 0; i < factors.size(); ++i) {
            auto [p, r] = factors[i];
            auto depth = levels[i].depth;
            if (depth == level.depth) {
                level.primes.push_back(p);
            }
            bool beta = level.depth <= depth && below_next(depth);
            level.beta[p] = beta ? Multiplicity::One : Multiplicity::Zero;
            for (int k = 0; k <= r; ++k) {
                bool alpha = k + 1 <= r && depth <= level.depth;
                level.alpha[{p, k}] = alpha ? Multiplicity::One : Multiplicity::Zero;
            }
        }
        // Every chain member is A_n(x) for x in C_{j+1} \ C_j.
        level.a = true;
        level.f = !level.primes.empty();
        level.dk = last && top_discrete;
        view.chain.push_back(std::move(level));
    }
    return view;
}

std::vector<std::int64_t> OrderedPartition::primes() const {
    std::vector<std::int64_t> out;
    for (const auto& cls : classes) {
        out.insert(out.end(), cls.begin(), cls.end());
    }
    return out;
}

namespace {

class PartitionParser {
public:
    explicit PartitionParser(const std::string& text) : text_(text) {}

    OrderedPartition parse() {
        OrderedPartition out;
        skip();
        if (peek() == '0') {
            ++pos_;
            skip();
            expect('<');
            out.bottom_at_zero = false;
        }
        out.classes.push_back(parse_class());
        skip();
        while (peek() == '<') {
            ++pos_;
            out.classes.push_back(parse_class());
            skip();
        }
        if (peek() == '!') {
            ++pos_;
            const std::string keyword = "discrete";
            if (text_.compare(pos_, keyword.size(), keyword) != 0) {
                throw ParseError("expected 'discrete'", pos_);
            }
            pos_ += keyword.size();
            out.top_discrete = true;
            skip();
            if (peek() == '(') {
                ++pos_;
                out.digits = parse_digits(out.classes.back());
            }
        }
        skip();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        check_disjoint(out);
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c) {
        skip();
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::int64_t number() {
        skip();
        std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > 1'000'000'000) {
                throw ParseError("number too large", start);
            }
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected a number", start);
        }
        return value;
    }

    std::int64_t prime() {
        skip();
        std::size_t start = pos_;
        auto value = number();
        if (!is_prime(value)) {
            throw ParseError(std::to_string(value) + " is not a prime", start);
        }
        return value;
    }

    std::vector<std::int64_t> parse_class() {
        std::vector<std::int64_t> out{prime()};
        skip();
        while (peek() == ',') {
            ++pos_;
            out.push_back(prime());
            skip();
        }
        return out;
    }

    FFamily parse_digits(const std::vector<std::int64_t>& top) {
        FFamily::DigitMap digits;
        while (true) {
            skip();
            std::size_t start = pos_;
            auto p = prime();
            if (std::find(top.begin(), top.end(), p) == top.end()) {
                throw ParseError("digits given for " + std::to_string(p) + ", which is not in the top class", start);
            }
            if (digits.count(p) != 0) {
                throw ParseError("digits for " + std::to_string(p) + " given twice", start);
            }
            expect(':');
            auto& list = digits[p];
            while (true) {
                skip();
                std::size_t at = pos_;
                auto d = number();
                if (d >= p) {
                    throw ParseError("digit " + std::to_string(d) + " out of range for " + std::to_string(p), at);
                }
                list.push_back(static_cast<int>(d));
                skip();
                if (peek() != ',') {
                    break;
                }
                ++pos_;
            }
            skip();
            if (peek() == ';') {
                ++pos_;
                continue;
            }
            expect(')');
            return FFamily(DefaultRule::Unit, std::move(digits));
        }
    }

    void check_disjoint(const OrderedPartition& partition) const {
        std::set<std::int64_t> seen;
        for (auto p : partition.primes()) {
            if (!seen.insert(p).second) {
                throw ParseError("prime " + std::to_string(p) + " appears in two classes", 0);
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string join(const std::vector<std::int64_t>& values, const char* separator) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i == 0 ? "" : separator) << values[i];
    }
    return out.str();
}

}  // namespace

OrderedPartition parse_partition(const std::string& text) { return PartitionParser(text).parse(); }

std::string to_string(const OrderedPartition& partition) {
    std::ostringstream out;
    if (!partition.bottom_at_zero) {
        out << "0 < ";
    }
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        out << (i == 0 ? "" : " < ") << join(partition.classes[i], ",");
    }
    if (partition.top_discrete) {
        out << " !discrete";
        const auto& digits = partition.digits.explicit_digits();
        if (!digits.empty()) {
            out << "(";
            bool first = true;
            for (const auto& [p, list] : digits) {
                out << (first ? "" : ";") << p << ":";
                for (std::size_t i = 0; i < list.size(); ++i) {
                    out << (i == 0 ? "" : ",") << list[i];
                }
                first = false;
            }
            out << ")";
        }
    }
    return out.str();
}

Model realize_partition(const OrderedPartition& partition) {
    if (partition.classes.empty()) {
        throw ConstructionError("a partition needs at least one class");
    }
    std::set<std::int64_t> probed;
    for (const auto& cls : partition.classes) {
        if (cls.empty()) {
            throw ConstructionError("empty class in partition");
        }
        for (auto p : cls) {
            if (!is_prime(p) || !probed.insert(p).second) {
                throw ConstructionError("classes must be disjoint sets of primes");
            }
        }
    }
    const LinearDescriptor below_zero({LinearComponent::rationals()});
    auto finish = [&](const Model& model) {
        return partition.bottom_at_zero ? model : lex_product(model, below_zero);
    };

    if (partition.classes.size() == 1) {
        if (!partition.top_discrete) {
            return finish(Model::q_cyclic(QOrderSpec{Angle(Quad(Rat(0), make_rat(Int(1), Int(4)))), Rat(0),
                                                     FFamily::unit()}));
        }
        if (partition.digits.default_rule() != DefaultRule::Unit) {
            throw ConstructionError("discrete digits must use the UNIT default");
        }
        for (const auto& [p, digits] : partition.digits.explicit_digits()) {
            if (partition.digits.digit(p, 1) == 0) {
                throw ConstructionError("discrete top class needs f_" + std::to_string(p) + "(1) != 0");
            }
        }
        return finish(build_qcyclic(QOrderSpec{Angle(), Rat(1), partition.digits}));
    }
    if (partition.top_discrete) {
        throw ConstructionError("G/H_p is dense for the top class once there are two or more classes");
    }
    // Γ = Q_top ⃗× … ⃗× Q_bottom wound at (1,…,1), with Q_α = ℤ[1/q : q ∉ α] and unprobed primes in the top class.
    const auto& top = partition.classes.back();
    std::vector<std::int64_t> inverted_at_top;
    for (auto p : probed) {
        if (std::find(top.begin(), top.end(), p) == top.end()) {
            inverted_at_top.push_back(p);
        }
    }
    std::vector<LinearComponent> components{LinearComponent::localized(inverted_at_top)};
    for (auto it = partition.classes.rbegin() + 1; it != partition.classes.rend(); ++it) {
        auto cls = *it;
        std::sort(cls.begin(), cls.end());
        components.push_back(LinearComponent::colocalized(cls));
    }
    std::vector<Quad> ones(components.size(), Quad(Rat(1)));
    return finish(Model::wound_round(LinearDescriptor(std::move(components)), LinearValue(std::move(ones))));
}

OrderedPartition partition_of(const TheoryInvariant& invariant) {
    if (invariant.tag != TheoryClass::TorsionFreeNonlinear || invariant.levels.empty()) {
        throw UsageError("partitions are read off torsion-free nonlinear invariants with probed primes");
    }
    std::map<std::size_t, std::vector<const PrimeInvariant*>> by_depth;
    for (const auto& level : invariant.levels) {
        by_depth[level.depth].push_back(&level);
    }
    OrderedPartition out;
    for (const auto& [depth, levels] : by_depth) {
        std::vector<std::int64_t> cls;
        for (const auto* level : levels) {
            cls.push_back(level->prime);
        }
        std::sort(cls.begin(), cls.end());
        out.classes.push_back(std::move(cls));
    }
    out.bottom_at_zero = by_depth.begin()->second.front()->is_zero;
    const auto& top = by_depth.rbegin()->second;
    out.top_discrete = top.front()->discrete;
    if (out.top_discrete) {
        FFamily::DigitMap digits;
        for (const auto* level : top) {
            // f(pⁿ) = f(pⁿ⁻¹) + pⁿ⁻¹·f_p(n).
            std::vector<int> list;
            Int previous(0);
            Int weight(1);
            for (const auto& value : level->f_table) {
                list.push_back(static_cast<int>(to_i64(Int((value - previous) / weight))));
                previous = value;
                weight *= level->prime;
            }
            while (!list.empty() && list.back() == 0) {
                list.pop_back();
            }
            if (list != std::vector<int>{1}) {
                digits[level->prime] = std::move(list);
            }
        }
        out.digits = FFamily(DefaultRule::Unit, std::move(digits));
    }
    return out;
}

std::optional<std::string> partition_mismatch(const OrderedPartition& partition, const TheoryInvariant& invariant) {
    if (invariant.tag != TheoryClass::TorsionFreeNonlinear) {
        return "class is " + to_string(invariant.tag);
    }
    auto depth_of = [&](std::int64_t p) -> std::optional<std::size_t> {
        for (const auto& entry : invariant.levels) {
            if (entry.prime == p) {
                return entry.depth;
            }
        }
        return std::nullopt;
    };
    std::optional<std::size_t> previous;
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
        const auto& cls = partition.classes[c];
        auto depth = depth_of(cls.front());
        if (!depth) {
            return "prime " + std::to_string(cls.front()) + " was not probed";
        }
        for (auto p : cls) {
            auto other = depth_of(p);
            if (!other) {
                return "prime " + std::to_string(p) + " was not probed";
            }
            if (*other != *depth) {
                return "H_" + std::to_string(p) + " differs from H_" + std::to_string(cls.front());
            }
        }
        if (previous && *previous >= *depth) {
            return "class " + join(cls, ",") + " is not above the class before it";
        }
        previous = depth;
        bool is_top = c + 1 == partition.classes.size();
        for (auto p : cls) {
            const auto& entry = invariant.level(p);
            if (c == 0 && entry.is_zero != partition.bottom_at_zero) {
                return "H_" + std::to_string(p) + (entry.is_zero ? " is" : " is not") + " {0}";
            }
            bool want_discrete = is_top && partition.top_discrete;
            if (entry.discrete != want_discrete) {
                return "G/H_" + std::to_string(p) + (entry.discrete ? " is discrete" : " is dense");
            }
            for (std::size_t n = 0; n < entry.f_table.size(); ++n) {
                auto expected = crt_f(partition.digits, ipow(p, static_cast<int>(n + 1)));
                if (entry.f_table[n] != expected) {
                    return "f_{G," + std::to_string(p) + "}(" + std::to_string(n + 1) + ") = " +
                           to_string(entry.f_table[n]) + ", expected " + std::to_string(expected);
                }
            }
        }
    }
    if (invariant.levels.size() != partition.primes().size()) {
        return "the invariant probes primes outside the partition";
    }
    return std::nullopt;
}

}  // namespace cog
