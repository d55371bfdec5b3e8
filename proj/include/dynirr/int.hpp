#ifndef DYNIRR_INT_HPP
#define DYNIRR_INT_HPP

/* Arbitrary-precision integers and rationals on top of GMP's C API,
   plus the small number-theoretic helpers used across the library. */

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynirr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct value_error : error {
    using error::error;
};
struct var_mismatch_error : error {
    using error::error;
};
struct exact_division_error : error {
    using error::error;
};
struct budget_error : error {
    using error::error;
};
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    Int(int v) { mpz_init_set_si(z_, v); }
    Int(unsigned long v) { mpz_init_set_ui(z_, v); }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ~Int() { mpz_clear(z_); }

    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    Int& operator=(long v) {
        mpz_set_si(z_, v);
        return *this;
    }

    static Int from_decimal(std::string_view s) {
        if (s.empty()) throw value_error("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw value_error("bare sign in integer literal");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw value_error("non-decimal character in integer literal: " + std::string(s));
        Int r;
        mpz_set_str(r.z_, std::string(s).c_str(), 10);
        return r;
    }
    std::string to_string() const {
        std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
        mpz_get_str(buf.data(), 10, z_);
        return std::string(buf.data());
    }

    /* 2^bits */
    static Int pow2(unsigned long bits) {
        Int r;
        mpz_setbit(r.z_, bits);
        return r;
    }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a) {
        Int r;
        mpz_neg(r.z_, a.z_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    void addmul(const Int& a, const Int& b) { mpz_addmul(z_, a.z_, b.z_); }
    void submul(const Int& a, const Int& b) { mpz_submul(z_, a.z_, b.z_); }

    /* Truncated division (quotient rounds toward zero). */
    friend Int operator/(const Int& a, const Int& b) {
        if (b.is_zero()) throw value_error("division by zero");
        Int r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw value_error("division by zero");
        Int r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    /* Exact division; throws if b does not divide a. */
    static Int divexact_checked(const Int& a, const Int& b) {
        if (b.is_zero()) throw value_error("division by zero");
        if (!mpz_divisible_p(a.z_, b.z_)) throw exact_division_error("integer division not exact");
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    /* Exact division assumed; caller guarantees divisibility. */
    static Int divexact(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    bool divisible_by(const Int& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    Int pow(unsigned long e) const {
        Int r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }
    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }
    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }
    friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
    friend bool operator!=(const Int& a, long b) { return mpz_cmp_si(a.z_, b) != 0; }

    static Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    /* Largest v with p^v | *this; undefined for zero input (throws). */
    unsigned long valuation(const Int& p) const {
        if (is_zero()) throw value_error("valuation of zero");
        Int cofactor;
        return mpz_remove(cofactor.z_, z_, p.z_);
    }

    unsigned long mod_ui(unsigned long m) const { return mpz_fdiv_ui(z_, m); }

    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long get_slong() const { return mpz_get_si(z_); }
    double get_double() const { return mpz_get_d(z_); }
    /* d * 2^exp with d in [0.5, 1); the pair form survives huge magnitudes. */
    double get_double_2exp(long* exp) const { return mpz_get_d_2exp(exp, z_); }
    std::size_t bit_size() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

  private:
    mpz_t z_;
};

class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long num, long den = 1) {
        if (den == 0) throw value_error("zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, den > 0 ? (unsigned long)den : (unsigned long)(-den));
        if (den < 0) mpq_neg(q_, q_);
        mpq_canonicalize(q_);
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw value_error("zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw value_error("division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    Int num() const {
        Int r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Int den() const {
        Int r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }
    std::string to_string() const { return num().to_string() + "/" + den().to_string(); }

  private:
    mpq_t q_;
};

/* ---- small number theory (word-size arguments) ---- */

/* Trial-division primality; intended for the small moduli of the library. */
bool is_prime_u64(std::uint64_t n);

/* Deterministic Miller-Rabin, any 64-bit argument. */
bool mr_is_prime_u64(std::uint64_t n);

std::vector<long> divisors_of(long n);
int mobius(long n);
long totient(long n);
/* factor n = p^e; returns false when n is not a prime power */
bool prime_power_decompose(long n, long* p, long* e);

/* FNV-1a over a byte string; stable digest for serialized objects. */
std::uint64_t fnv1a(std::string_view data);

}  // namespace dynirr

#endif
