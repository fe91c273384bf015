#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cog {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (whitespace not allowed).
Rat parse_rat(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);

Int floor_of(const Rat& value);
bool is_integer(const Rat& value);
int sign_of(const Rat& value);
int sign_of(const Int& value);

/// Narrows to int64, throwing std::overflow_error when out of range.
std::int64_t to_i64(const Int& value);

// Small-integer number theory on int64 values.

bool is_prime(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exponent);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m; throws ValidationError when gcd(a,m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// The primes up to and including bound.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

}  // namespace cog
