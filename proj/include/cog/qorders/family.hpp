#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cog {

/// How digits of primes without an explicit list are defined.
enum class DefaultRule {
    Zero,  ///< f_p ≡ 0
    Unit,  ///< f_p(1) = 1, all later digits 0
};

/// A finitely described family of digit functions f_p : ℕ⁺ → {0,…,p−1}.
///
/// Listed primes carry explicit digits f_p(1..N_p), extended by zeros.
class FFamily {
public:
    using DigitMap = std::map<std::int64_t, std::vector<int>>;

    FFamily() = default;
    FFamily(DefaultRule rule, DigitMap digits);

    static FFamily unit() { return FFamily(DefaultRule::Unit, {}); }
    static FFamily zero() { return FFamily(DefaultRule::Zero, {}); }

    DefaultRule default_rule() const { return rule_; }
    const DigitMap& explicit_digits() const { return digits_; }
    bool is_listed(std::int64_t p) const { return digits_.count(p) != 0; }

    /// f_p(r) for r ≥ 1.
    int digit(std::int64_t p, int r) const;
    /// f_p(1..depth).
    std::vector<int> digits(std::int64_t p, int depth) const;
    /// f(p^r) = f_p(1) + p f_p(2) + … + p^{r−1} f_p(r).
    std::int64_t prime_power_value(std::int64_t p, int r) const;

    bool is_zero_map(std::int64_t p) const;
    /// Every f_p is the zero map.
    bool all_zero() const;
    /// No f_p is the zero map and only finitely many have f_p(1) = 0.
    bool has_discrete_criterion() const;
    /// Number of leading zero digits of f_p (finite unless f_p ≡ 0).
    int leading_zero_run(std::int64_t p) const;
    /// Primes with f_p(1) = 0 whose map is not identically zero; finite under the discrete criterion.
    std::vector<std::int64_t> listed_primes_with_zero_first_digit() const;

    friend bool operator==(const FFamily&, const FFamily&) = default;

private:
    DefaultRule rule_ = DefaultRule::Unit;
    DigitMap digits_;
};

/// The map f of the family: f(1)=0, f(p^r) by the digit formula, composite n by CRT.
std::int64_t crt_f(const FFamily& family, std::int64_t n);

/// Recovers a family from f on a grid of prime powers p^r ↦ f(p^r).
///
/// Listed primes receive explicit digits up to the largest grid exponent; the
/// default rule is Zero. Violations of (*) or (**) raise ValidationError.
FFamily family_from_f(const std::map<std::int64_t, std::int64_t>& grid);

std::string to_string(DefaultRule rule);

}  // namespace cog
