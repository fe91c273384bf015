#include "cog/core/linear.hpp"

#include <algorithm>

#include "cog/error.hpp"

namespace cog {

namespace {

std::vector<std::int64_t> normalized_primes(std::vector<std::int64_t> primes) {
    for (auto p : primes) {
        if (!is_prime(p)) {
            throw ConstructionError(std::to_string(p) + " is not a prime");
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

// Strips every prime in the list from den; returns what is left.
Int strip_primes(Int den, const std::vector<std::int64_t>& primes) {
    for (auto p : primes) {
        Int prime(static_cast<long>(p));
        while (den % prime == 0) {
            den /= prime;
        }
    }
    return den;
}

std::string join_primes(const std::vector<std::int64_t>& primes) {
    std::string out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        out += (i ? "," : "") + std::to_string(primes[i]);
    }
    return out;
}

}  // namespace

LinearComponent LinearComponent::localized(std::vector<std::int64_t> primes) {
    primes = normalized_primes(std::move(primes));
    if (primes.empty()) {
        return integers();
    }
    return LinearComponent(Kind::Localized, std::move(primes));
}

LinearComponent LinearComponent::colocalized(std::vector<std::int64_t> excluded) {
    excluded = normalized_primes(std::move(excluded));
    if (excluded.empty()) {
        return rationals();
    }
    return LinearComponent(Kind::CoLocalized, std::move(excluded));
}

bool LinearComponent::contains(const Quad& value) const {
    if (kind_ == Kind::QuadraticField) {
        return true;
    }
    if (!value.is_rational()) {
        return false;
    }
    const Int& den = value.rat().get_den();
    switch (kind_) {
        case Kind::Rationals:
            return true;
        case Kind::Integers:
            return den == 1;
        case Kind::Localized:
            return strip_primes(den, primes_) == 1;
        case Kind::CoLocalized:
            for (auto p : primes_) {
                if (den % Int(static_cast<long>(p)) == 0) {
                    return false;
                }
            }
            return true;
        case Kind::QuadraticField:
            break;
    }
    return true;
}

bool LinearComponent::divisible_by(std::int64_t p) const {
    switch (kind_) {
        case Kind::Rationals:
        case Kind::QuadraticField:
            return true;
        case Kind::Integers:
            return false;
        case Kind::Localized:
            return std::binary_search(primes_.begin(), primes_.end(), p);
        case Kind::CoLocalized:
            return !std::binary_search(primes_.begin(), primes_.end(), p);
    }
    return false;
}

bool LinearComponent::is_divisible() const {
    return kind_ == Kind::Rationals || kind_ == Kind::QuadraticField;
}

std::string LinearComponent::describe() const {
    switch (kind_) {
        case Kind::Rationals:
            return "Q";
        case Kind::Integers:
            return "Z";
        case Kind::QuadraticField:
            return "Q(sqrt2)";
        case Kind::Localized:
            return "Z[1/p : p in {" + join_primes(primes_) + "}]";
        case Kind::CoLocalized:
            return "Z[1/p : p not in {" + join_primes(primes_) + "}]";
    }
    return "?";
}

LinearValue LinearValue::unit(std::size_t size, std::size_t index) {
    LinearValue v = zero(size);
    v.coords_.at(index) = Quad(1L);
    return v;
}

bool LinearValue::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Quad& q) { return q.is_zero(); });
}

int LinearValue::sign() const {
    for (const auto& q : coords_) {
        int s = q.sign();
        if (s != 0) {
            return s;
        }
    }
    return 0;
}

LinearValue& LinearValue::operator+=(const LinearValue& other) {
    if (other.size() != size()) {
        throw DomainError("linear values of different lengths");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

LinearValue& LinearValue::operator-=(const LinearValue& other) {
    if (other.size() != size()) {
        throw DomainError("linear values of different lengths");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

LinearValue operator-(const LinearValue& a) {
    LinearValue out = a;
    for (auto& q : out.coords_) {
        q = -q;
    }
    return out;
}

LinearValue LinearValue::scaled(const Quad& factor) const {
    LinearValue out = *this;
    for (auto& q : out.coords_) {
        q *= factor;
    }
    return out;
}

LinearValue LinearValue::divided(const Quad& divisor) const {
    LinearValue out = *this;
    for (auto& q : out.coords_) {
        q /= divisor;
    }
    return out;
}

std::strong_ordering operator<=>(const LinearValue& a, const LinearValue& b) {
    if (a.size() != b.size()) {
        throw DomainError("linear values of different lengths");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = a.coords_[i] <=> b.coords_[i];
        if (c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

bool LinearDescriptor::contains(const LinearValue& value) const {
    if (value.size() != components_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].contains(value[i])) {
            return false;
        }
    }
    return true;
}

bool LinearDescriptor::divisible_by(std::int64_t p) const {
    return std::all_of(components_.begin(), components_.end(),
                       [p](const LinearComponent& c) { return c.divisible_by(p); });
}

bool LinearDescriptor::is_divisible() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const LinearComponent& c) { return c.is_divisible(); });
}

bool LinearDescriptor::is_discrete() const {
    return !components_.empty() && components_.back().is_discrete();
}

std::string LinearDescriptor::describe() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        out += (i ? " x " : "") + components_[i].describe();
    }
    return out.empty() ? "{0}" : out;
}

std::string to_string(const LinearValue& value) {
    std::string out = "(";
    for (std::size_t i = 0; i < value.size(); ++i) {
        out += (i ? ", " : "") + to_string(value[i]);
    }
    return out + ")";
}

}  // namespace cog
