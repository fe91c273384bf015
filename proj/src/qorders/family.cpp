#include "cog/qorders/family.hpp"

#include <algorithm>

#include "cog/arith/rational.hpp"
#include "cog/error.hpp"

namespace cog {

FFamily::FFamily(DefaultRule rule, DigitMap digits) : rule_(rule), digits_(std::move(digits)) {
    for (const auto& [p, list] : digits_) {
        if (!is_prime(p)) {
            throw ConstructionError("family key " + std::to_string(p) + " is not a prime");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 0 || list[i] >= p) {
                throw ConstructionError("digit f_" + std::to_string(p) + "(" + std::to_string(i + 1) +
                                        ")=" + std::to_string(list[i]) + " outside {0,...," +
                                        std::to_string(p - 1) + "}");
            }
        }
    }
}

int FFamily::digit(std::int64_t p, int r) const {
    if (r < 1) {
        throw UsageError("digit index must be positive");
    }
    auto it = digits_.find(p);
    if (it != digits_.end()) {
        const auto& list = it->second;
        return static_cast<std::size_t>(r) <= list.size() ? list[r - 1] : 0;
    }
    return (rule_ == DefaultRule::Unit && r == 1) ? 1 : 0;
}

std::vector<int> FFamily::digits(std::int64_t p, int depth) const {
    std::vector<int> out;
    for (int r = 1; r <= depth; ++r) {
        out.push_back(digit(p, r));
    }
    return out;
}

std::int64_t FFamily::prime_power_value(std::int64_t p, int r) const {
    std::int64_t value = 0;
    std::int64_t weight = 1;
    for (int i = 1; i <= r; ++i) {
        value += weight * digit(p, i);
        if (i < r) {
            weight = ipow(p, i);
        }
    }
    return value;
}

bool FFamily::is_zero_map(std::int64_t p) const {
    auto it = digits_.find(p);
    if (it == digits_.end()) {
        return rule_ == DefaultRule::Zero;
    }
    return std::all_of(it->second.begin(), it->second.end(), [](int d) { return d == 0; });
}

bool FFamily::all_zero() const {
    if (rule_ != DefaultRule::Zero) {
        return false;
    }
    return std::all_of(digits_.begin(), digits_.end(),
                       [this](const auto& entry) { return is_zero_map(entry.first); });
}

bool FFamily::has_discrete_criterion() const {
    if (rule_ == DefaultRule::Zero) {
        return false;
    }
    return std::none_of(digits_.begin(), digits_.end(),
                        [this](const auto& entry) { return is_zero_map(entry.first); });
}

int FFamily::leading_zero_run(std::int64_t p) const {
    if (is_zero_map(p)) {
        throw DomainError("f_" + std::to_string(p) + " is the zero map");
    }
    int r = 0;
    while (digit(p, r + 1) == 0) {
        ++r;
    }
    return r;
}

std::vector<std::int64_t> FFamily::listed_primes_with_zero_first_digit() const {
    std::vector<std::int64_t> out;
    for (const auto& [p, list] : digits_) {
        if (!is_zero_map(p) && digit(p, 1) == 0) {
            out.push_back(p);
        }
    }
    return out;
}

std::int64_t crt_f(const FFamily& family, std::int64_t n) {
    if (n < 1) {
        throw UsageError("crt_f needs n >= 1");
    }
    std::int64_t value = 0;
    std::int64_t modulus = 1;
    for (auto [p, r] : factorize(n)) {
        std::int64_t pr = ipow(p, r);
        std::int64_t residue = family.prime_power_value(p, r);
        // Solve x ≡ value (mod modulus), x ≡ residue (mod pr).
        std::int64_t inv = mod_inverse(modulus % pr, pr);
        std::int64_t t = mul_mod(mod_floor(residue - value, pr), inv, pr);
        value += modulus * t;
        modulus *= pr;
        value = mod_floor(value, modulus);
    }
    return value;
}

FFamily family_from_f(const std::map<std::int64_t, std::int64_t>& grid) {
    // Group the grid by prime: p ↦ (r ↦ f(p^r)).
    std::map<std::int64_t, std::map<int, std::int64_t>> by_prime;
    for (const auto& [q, value] : grid) {
        auto factors = q > 1 ? factorize(q) : decltype(factorize(2)){};
        if (factors.size() != 1) {
            throw ValidationError("grid key " + std::to_string(q) + " is not a prime power");
        }
        auto [p, r] = factors.front();
        if (value < 0 || value >= q) {
            throw ValidationError("(*) fails: f(" + std::to_string(q) + ")=" + std::to_string(value) +
                                  " outside {0,...," + std::to_string(q - 1) + "}");
        }
        by_prime[p][r] = value;
    }

    FFamily::DigitMap digits;
    for (const auto& [p, values] : by_prime) {
        // (**) on every pair of grid points of the same prime.
        for (auto lo = values.begin(); lo != values.end(); ++lo) {
            for (auto hi = std::next(lo); hi != values.end(); ++hi) {
                std::int64_t small = ipow(p, lo->first);
                if (hi->second % small != lo->second) {
                    throw ValidationError("(**) fails: f(" + std::to_string(ipow(p, hi->first)) + ")=" +
                                          std::to_string(hi->second) + " mod " + std::to_string(small) +
                                          " = " + std::to_string(hi->second % small) + " but f(" +
                                          std::to_string(small) + ")=" + std::to_string(lo->second));
                }
            }
        }
        int depth = values.rbegin()->first;
        std::int64_t top = values.rbegin()->second;
        // f_p(r) = (f(p^r) − f(p^{r−1})) / p^{r−1}, with f(p^r) = f(p^depth) mod p^r.
        std::vector<int> list;
        std::int64_t previous = 0;
        for (int r = 1; r <= depth; ++r) {
            std::int64_t current = top % ipow(p, r);
            list.push_back(static_cast<int>((current - previous) / ipow(p, r - 1)));
            previous = current;
        }
        digits.emplace(p, std::move(list));
    }
    return FFamily(DefaultRule::Zero, std::move(digits));
}

std::string to_string(DefaultRule rule) { return rule == DefaultRule::Unit ? "unit" : "zero"; }

}  // namespace cog
