#include "cog/arith/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "cog/error.hpp"

namespace cog {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw ValidationError("zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_text(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    return true;
}

Int parse_int(std::string_view text) {
    if (!valid_integer_text(text)) {
        throw ValidationError("malformed integer '" + std::string(text) + "'");
    }
    if (text[0] == '+') {
        text.remove_prefix(1);
    }
    return Int(std::string(text), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    return make_rat(num, den);
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int floor_of(const Rat& value) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

int sign_of(const Rat& value) { return sgn(value); }

int sign_of(const Int& value) { return sgn(value); }

std::int64_t to_i64(const Int& value) {
    if (!value.fits_slong_p()) {
        throw std::overflow_error("integer " + value.get_str() + " exceeds 64 bits");
    }
    return value.get_si();
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) {
        throw UsageError("factorize needs a positive integer");
    }
    std::vector<std::pair<std::int64_t, int>> result;
    auto take = [&n, &result](std::int64_t d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        result.emplace_back(d, e);
    };
    if (n % 2 == 0) {
        take(2);
    }
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            take(d);
        }
    }
    if (n > 1) {
        result.emplace_back(n, 1);
    }
    return result;
}

std::int64_t ipow(std::int64_t base, int exponent) {
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) {
            throw std::overflow_error("integer power overflows 64 bits");
        }
    }
    return result;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    auto product = static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m);
    return static_cast<std::int64_t>(product % m);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    std::int64_t g = std::gcd(a, b);
    std::int64_t result = 0;
    if (__builtin_mul_overflow(a / g, b, &result)) {
        throw std::overflow_error("lcm overflows 64 bits");
    }
    return result < 0 ? -result : result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) {
        return 0;
    }
    std::int64_t old_r = mod_floor(a, m);
    std::int64_t r = m;
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw ValidationError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    return mod_floor(old_s, m);
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> primes;
    for (std::int64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    return primes;
}

}  // namespace cog
