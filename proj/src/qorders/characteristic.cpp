#include "cog/qorders/characteristic.hpp"

#include <stdexcept>

#include "cog/error.hpp"
#include "cog/structure/structure.hpp"

namespace cog {

namespace {

Int prime_power(std::int64_t p, int n) {
    if (!is_prime(p)) {
        throw UsageError("expected a prime, got " + std::to_string(p));
    }
    if (n < 1) {
        throw UsageError("expected a positive exponent, got " + std::to_string(n));
    }
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    return out;
}

}  // namespace

Model build_qcyclic(const QOrderSpec& spec) {
    spec.validate();
    return Model::q_cyclic(spec);
}

Int f_G_p(const Model& model, std::int64_t p, int n) {
    const Int modulus = prime_power(p, n);
    auto level = H_p_level(model, p);
    if (!quotient_is_discrete(model, level)) {
        throw DomainError("G/H_" + std::to_string(p) + " is dense in " + model.describe());
    }
    Element g = quotient_unit(model, level);
    auto h = divide(model, g, modulus);
    if (!h) {
        throw DomainError("the unit of G/H_" + std::to_string(p) + " has no " + to_string(modulus) +
                          "-th root in " + model.describe());
    }
    Angle u = U_of(model, *h);
    if (!u.is_rational()) {
        throw std::logic_error("irrational angle for a root of a linear element");
    }
    Rat scaled = u.rat_part() * Rat(modulus);
    if (scaled.get_den() != 1 || scaled <= 0 || scaled >= Rat(modulus)) {
        throw std::logic_error("root angle " + to_string(u) + " is not a nonzero multiple of 1/" + to_string(modulus));
    }
    return scaled.get_num();
}

Int phi_G_p(const Model& model, std::int64_t p, int n) {
    const Int modulus = prime_power(p, n);
    Int f = f_G_p(model, p, n);
    Int inverse;
    if (mpz_invert(inverse.get_mpz_t(), f.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw std::logic_error("f_{G,p}(n) = " + to_string(f) + " is not a unit modulo " + to_string(modulus));
    }
    return inverse;
}

std::vector<int> characteristic_digits(const Model& model, std::int64_t p, int depth) {
    Int phi = phi_G_p(model, p, depth);
    std::vector<int> digits;
    for (int i = 0; i < depth; ++i) {
        Int digit = phi % p;
        digits.push_back(static_cast<int>(digit.get_si()));
        phi /= p;
    }
    return digits;
}

bool is_c_archimedean(const QOrderSpec& spec) { return spec.theta.irr_part() != 0; }

bool is_c_archimedean(const Model& model) {
    const auto* qc = std::get_if<QCyclic>(&model.base());
    if (qc == nullptr) {
        throw UsageError("c-archimedean test needs a cyclic order on Q, got " + model.describe());
    }
    return !model.has_tail() && is_c_archimedean(qc->spec);
}

}  // namespace cog
