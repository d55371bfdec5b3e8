#ifndef DYNIRR_POLY1_HPP
#define DYNIRR_POLY1_HPP

/* Dense univariate polynomials over Z with a symbolic variable tag.
   Values are canonical (no trailing zero coefficients) and immutable in
   spirit: every operation returns a fresh value.  The degree of the zero
   polynomial is the distinguished "minus infinity", surfaced as an empty
   optional rather than a sentinel integer. */

#include <optional>
#include <string>
#include <vector>

#include "dynirr/int.hpp"

namespace dynirr {

class ModPoly;

class IntPoly1 {
  public:
    IntPoly1() : var_("a") {}
    explicit IntPoly1(std::string var) : var_(std::move(var)) {}
    IntPoly1(std::string var, std::vector<Int> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static IntPoly1 constant(std::string var, Int value) {
        std::vector<Int> c;
        c.push_back(std::move(value));
        return IntPoly1(std::move(var), std::move(c));
    }
    /* the monomial coeff * var^exp */
    static IntPoly1 monomial(std::string var, Int coeff, std::size_t exp) {
        std::vector<Int> c(exp + 1);
        c[exp] = std::move(coeff);
        return IntPoly1(std::move(var), std::move(c));
    }
    static IntPoly1 variable(std::string var) { return monomial(var, Int(1), 1); }

    const std::string& var() const { return var_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /* empty = minus infinity (zero polynomial) */
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return (long)c_.size() - 1;
    }
    long degree_or(long when_zero) const { return c_.empty() ? when_zero : (long)c_.size() - 1; }
    const Int& leading() const {
        if (c_.empty()) throw value_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const IntPoly1& a, const IntPoly1& b) {
        if (a.c_.size() != b.c_.size()) return false;
        if (!a.c_.empty() && a.var_ != b.var_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const IntPoly1& a, const IntPoly1& b) { return !(a == b); }

    friend IntPoly1 operator+(const IntPoly1& a, const IntPoly1& b);
    friend IntPoly1 operator-(const IntPoly1& a, const IntPoly1& b);
    friend IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b);
    friend IntPoly1 operator-(const IntPoly1& a);
    friend IntPoly1 operator*(const Int& s, const IntPoly1& a);

    IntPoly1 pow(unsigned long e) const;
    IntPoly1 derivative() const;
    Int evaluate(const Int& x) const;
    IntPoly1 compose(const IntPoly1& inner) const;  // substitute var := inner
    Int content() const;
    IntPoly1 primitive_part() const;

    std::string to_string() const;

    void check_same_var(const IntPoly1& other) const {
        if (!is_zero() && !other.is_zero() && var_ != other.var_)
            throw var_mismatch_error("variable mismatch: '" + var_ + "' vs '" + other.var_ + "'");
    }

  private:
    std::string var_;
    std::vector<Int> c_;  // c_[i] multiplies var^i; c_.back() nonzero

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    friend IntPoly1 poly1_from_coeffs_unchecked(std::string, std::vector<Int>);
};

/* Exact quotient num/den; throws exact_division_error when the division
   leaves a remainder.  The result is re-checked by multiplication (full
   re-multiplication below an internal cost threshold, and an exact
   evaluation-form identity plus structural checks above it). */
IntPoly1 exact_div(const IntPoly1& num, const IntPoly1& den);

/* Exact quotient with a caller-supplied bound: every quotient coefficient
   is promised to satisfy |c| < 2^(coeff_bound_bits).  Enables the
   evaluation-at-2^M fast path for very large operands. */
IntPoly1 exact_div_bounded(const IntPoly1& num, const IntPoly1& den, unsigned long coeff_bound_bits);

/* quotient and remainder by a monic divisor (exact over Z) */
std::pair<IntPoly1, IntPoly1> divrem_monic(const IntPoly1& num, const IntPoly1& den);

/* Resultant with the Sylvester convention (rows of f first):
   resultant(f, g) = (-1)^(deg f * deg g) * resultant(g, f).
   Computed by the subresultant polynomial remainder sequence. */
Int resultant(const IntPoly1& f, const IntPoly1& g);

/* Bareiss determinant of the Sylvester matrix; cross-check for small degrees. */
Int resultant_sylvester(const IntPoly1& f, const IntPoly1& g);

/* gcd over Z up to sign, primitive (subresultant PRS) */
IntPoly1 poly_gcd(const IntPoly1& f, const IntPoly1& g);

/* coefficientwise reduction into 0..p-1; p checked prime by trial division */
ModPoly reduce_mod(const IntPoly1& f, std::uint64_t p);

}  // namespace dynirr

#endif
