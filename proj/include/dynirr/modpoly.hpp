#ifndef DYNIRR_MODPOLY_HPP
#define DYNIRR_MODPOLY_HPP

/* Univariate polynomials over F_p for word-size prime p: gcd, modular
   exponentiation, Rabin irreducibility, power-of-base detection and the
   Frobenius period divisibility check. */

#include <cstdint>
#include <optional>
#include <vector>

#include "dynirr/int.hpp"

namespace dynirr {

class ModPoly {
  public:
    ModPoly() : p_(2) {}
    explicit ModPoly(std::uint64_t p) : p_(check_p(p)) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(check_p(p)), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static ModPoly monomial(std::uint64_t p, std::uint64_t coeff, std::size_t exp) {
        std::vector<std::uint64_t> c(exp + 1, 0);
        c[exp] = coeff;
        return ModPoly(p, std::move(c));
    }
    static ModPoly variable(std::uint64_t p) { return monomial(p, 1, 1); }
    static ModPoly constant(std::uint64_t p, std::uint64_t v) { return monomial(p, v, 0); }

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return (long)c_.size() - 1;
    }
    long degree_or(long when_zero) const { return c_.empty() ? when_zero : (long)c_.size() - 1; }
    std::uint64_t leading() const {
        if (c_.empty()) throw value_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    ModPoly scaled(std::uint64_t s) const;
    ModPoly monic() const;
    ModPoly pow(unsigned long e) const;
    ModPoly derivative() const;
    std::uint64_t evaluate(std::uint64_t x) const;
    std::string to_string(const std::string& var = "a") const;

    void check_same_modulus(const ModPoly& o) const {
        if (p_ != o.p_) throw var_mismatch_error("modulus mismatch");
    }

  private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    static std::uint64_t check_p(std::uint64_t p) {
        bool ok = (p < (1ull << 20)) ? is_prime_u64(p) : mr_is_prime_u64(p);
        if (!ok) throw value_error("modulus " + std::to_string(p) + " is not prime");
        return p;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

std::pair<ModPoly, ModPoly> divrem(const ModPoly& num, const ModPoly& den);
ModPoly exact_div(const ModPoly& num, const ModPoly& den);

/* monic gcd; gcd(f, 0) = monic(f) */
ModPoly gcd(const ModPoly& f, const ModPoly& g);

/* base^e reduced modulo a nonconstant modulus, square-and-multiply */
ModPoly modexp(const ModPoly& base, const Int& e, const ModPoly& modulus);

/* Rabin: f of degree n is irreducible iff x^(p^n) = x (mod f) and
   gcd(x^(p^(n/t)) - x, f) = 1 for every prime t | n. */
bool is_irreducible(const ModPoly& f);

/* brute-force reference: trial division by all monic polynomials of
   degree <= deg(f)/2; only sensible for tiny p^deg */
bool is_irreducible_bruteforce(const ModPoly& f);

/* N >= 0 with A = c * B^N for a nonzero scalar c, if such N exists */
struct PowerOfResult {
    long exponent;
    std::uint64_t scalar;
};
std::optional<PowerOfResult> as_power_of(const ModPoly& A, const ModPoly& B);

/* true iff a^(D^n) = a modulo rn_mod_p */
bool frobenius_period_check(const ModPoly& rn_mod_p, long D, long n);

}  // namespace dynirr

#endif
