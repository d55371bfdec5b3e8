#include "dynirr/modpoly.hpp"

#include <algorithm>

#include "dynirr/detail/kronecker.hpp"

namespace dynirr {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((__uint128_t)a * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime and a != 0 mod p
    long long t = 0, newt = 1;
    long long r = (long long)p, newr = (long long)(a % p);
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (r != 1) throw value_error("not invertible");
    return (std::uint64_t)(t < 0 ? t + (long long)p : t);
}

}  // namespace

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t v = 0;
        if (i < a.coeffs().size()) v = a.coeffs()[i];
        if (i < b.coeffs().size()) v = (v + b.coeffs()[i]) % p;
        c[i] = v;
    }
    return ModPoly(p, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t v = (i < a.coeffs().size()) ? a.coeffs()[i] : 0;
        std::uint64_t w = (i < b.coeffs().size()) ? b.coeffs()[i] : 0;
        c[i] = (v + p - w) % p;
    }
    return ModPoly(p, std::move(c));
}

namespace {

/* big products go through one GMP multiplication via Kronecker packing */
std::vector<std::uint64_t> mul_coeffs_kronecker(const std::vector<std::uint64_t>& x,
                                                const std::vector<std::uint64_t>& y,
                                                std::uint64_t p) {
    auto to_ints = [](const std::vector<std::uint64_t>& v) {
        std::vector<Int> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = Int((unsigned long)v[i]);
        return r;
    };
    std::vector<Int> prod = detail::mul_via_kronecker(to_ints(x), to_ints(y));
    std::vector<std::uint64_t> c(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) c[i] = prod[i].mod_ui(p);
    return c;
}

}  // namespace

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return ModPoly(p);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    if ((double)x.size() * (double)y.size() > 1.0e7)
        return ModPoly(p, mul_coeffs_kronecker(x, y, p));
    std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
    // accumulate in 128 bits, reducing lazily
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        __uint128_t xi = x[i];
        __uint128_t acc = 0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            acc = (__uint128_t)c[i + j] + xi * y[j];
            c[i + j] = (std::uint64_t)(acc % p);
        }
    }
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mulmod(c_[i], s % p_, p_);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return scaled(invmod(leading(), p_));
}

ModPoly ModPoly::pow(unsigned long e) const {
    ModPoly result = ModPoly::constant(p_, 1);
    if (e == 0) return result;
    ModPoly base = *this;
    while (true) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(c));
}

std::uint64_t ModPoly::evaluate(std::uint64_t x) const {
    std::uint64_t r = 0;
    x %= p_;
    for (std::size_t i = c_.size(); i-- > 0;) r = (mulmod(r, x, p_) + c_[i]) % p_;
    return r;
}

std::string ModPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& num, const ModPoly& den) {
    num.check_same_modulus(den);
    if (den.is_zero()) throw value_error("division by zero polynomial");
    std::uint64_t p = num.modulus();
    long dn = num.degree_or(-1), dd = *den.degree();
    if (dn < dd) return {ModPoly(p), num};
    std::uint64_t inv_lead = invmod(den.leading(), p);
    std::vector<std::uint64_t> rem(num.coeffs());
    std::vector<std::uint64_t> quot((std::size_t)(dn - dd) + 1, 0);
    for (long i = dn; i >= dd; --i) {
        std::uint64_t q = mulmod(rem[(std::size_t)i], inv_lead, p);
        if (q == 0) continue;
        quot[(std::size_t)(i - dd)] = q;
        for (long j = 0; j <= dd; ++j) {
            std::uint64_t t = mulmod(q, den.coeffs()[(std::size_t)j], p);
            std::uint64_t& r = rem[(std::size_t)(i - dd + j)];
            r = (r + p - t) % p;
        }
    }
    rem.resize((std::size_t)dd);
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly exact_div(const ModPoly& num, const ModPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw exact_division_error("F_p division not exact");
    return q;
}

ModPoly gcd(const ModPoly& f, const ModPoly& g) {
    f.check_same_modulus(g);
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = divrem(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

ModPoly modexp(const ModPoly& base, const Int& e, const ModPoly& modulus) {
    base.check_same_modulus(modulus);
    if (modulus.degree_or(0) < 1) throw value_error("modexp requires a nonconstant modulus");
    if (e.sign() < 0) throw value_error("modexp requires a nonnegative exponent");
    ModPoly result = ModPoly::constant(base.modulus(), 1);
    result = divrem(result, modulus).second;
    ModPoly b = divrem(base, modulus).second;
    std::size_t nbits = e.bit_size();
    for (std::size_t i = nbits; i-- > 0;) {
        result = divrem(result * result, modulus).second;
        if (mpz_tstbit(e.raw(), i)) result = divrem(result * b, modulus).second;
    }
    return result;
}

bool is_irreducible(const ModPoly& f) {
    long n = f.degree_or(-1);
    if (n < 1) throw value_error("irreducibility undefined for constants");
    if (n == 1) return true;
    std::uint64_t p = f.modulus();
    ModPoly fm = f.monic();
    ModPoly x = ModPoly::variable(p);
    // iterated Frobenius: frob[m] = x^(p^m) mod f
    std::vector<ModPoly> frob;
    frob.push_back(divrem(x, fm).second);
    for (long m = 1; m <= n; ++m) frob.push_back(modexp(frob.back(), Int((unsigned long)p), fm));
    if (frob[(std::size_t)n] != frob[0]) return false;  // x^(p^n) != x
    long m = n;
    for (long t = 2; t * t <= m; ++t) {
        if (m % t == 0) {
            ModPoly g = gcd(frob[(std::size_t)(n / t)] - frob[0], fm);
            if (g.degree_or(0) != 0) return false;
            while (m % t == 0) m /= t;
        }
    }
    if (m > 1) {
        ModPoly g = gcd(frob[(std::size_t)(n / m)] - frob[0], fm);
        if (g.degree_or(0) != 0) return false;
    }
    return true;
}

bool is_irreducible_bruteforce(const ModPoly& f) {
    long n = f.degree_or(-1);
    if (n < 1) throw value_error("irreducibility undefined for constants");
    if (n == 1) return true;
    std::uint64_t p = f.modulus();
    // enumerate monic divisor candidates of degree 1..n/2
    for (long d = 1; d <= n / 2; ++d) {
        std::vector<std::uint64_t> c((std::size_t)d + 1, 0);
        c[(std::size_t)d] = 1;
        while (true) {
            ModPoly cand(p, c);
            if (divrem(f, cand).second.is_zero()) return false;
            // increment base-p counter over the low d coefficients
            long i = 0;
            for (; i < d; ++i) {
                if (++c[(std::size_t)i] < p) break;
                c[(std::size_t)i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

std::optional<PowerOfResult> as_power_of(const ModPoly& A, const ModPoly& B) {
    A.check_same_modulus(B);
    if (A.is_zero()) throw value_error("as_power_of: zero polynomial");
    if (B.degree_or(0) < 1) throw value_error("as_power_of: base must be nonconstant");
    long da = *A.degree(), db = *B.degree();
    if (da % db != 0) return std::nullopt;
    std::uint64_t scalar = A.leading();
    ModPoly cur = A.monic();
    ModPoly base = B.monic();
    long n = 0;
    while (cur.degree_or(0) > 0) {
        auto [q, r] = divrem(cur, base);
        if (!r.is_zero()) return std::nullopt;
        cur = q;
        ++n;
    }
    if (!(cur == ModPoly::constant(A.modulus(), 1))) return std::nullopt;
    // scalar adjustment: A = lc(A)/lc(B)^n * (monic B)^n * lc(B)^n; report c with A = c*B^N
    std::uint64_t p = A.modulus();
    std::uint64_t lb = B.leading();
    std::uint64_t lbn = 1;
    for (long i = 0; i < n; ++i) lbn = (std::uint64_t)((__uint128_t)lbn * lb % p);
    std::uint64_t c = (std::uint64_t)((__uint128_t)scalar * invmod(lbn, p) % p);
    return PowerOfResult{n, c};
}

bool frobenius_period_check(const ModPoly& rn_mod_p, long D, long n) {
    if (rn_mod_p.degree_or(0) < 1) throw value_error("frobenius_period_check: constant modulus");
    if (D < 2 || n < 1) throw value_error("frobenius_period_check: bad parameters");
    Int e = Int((long)D).pow((unsigned long)n);
    ModPoly x = ModPoly::variable(rn_mod_p.modulus());
    ModPoly lhs = modexp(x, e, rn_mod_p);
    ModPoly rhs = divrem(x, rn_mod_p).second;
    return lhs == rhs;
}

}  // namespace dynirr
