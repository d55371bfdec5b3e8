#include "dynirr/poly1.hpp"

#include <algorithm>
#include <cmath>

#include "dynirr/detail/kronecker.hpp"
#include "dynirr/modpoly.hpp"

namespace dynirr {

namespace {

/* schoolbook vs kronecker crossover, in estimated word operations */
constexpr double MUL_KRONECKER_THRESHOLD = 2.0e6;

double estimated_schoolbook_cost(const std::vector<Int>& a, const std::vector<Int>& b) {
    double wa = (double)detail::max_coeff_bits(a) / 64.0 + 1.0;
    double wb = (double)detail::max_coeff_bits(b) / 64.0 + 1.0;
    return (double)a.size() * (double)b.size() * wa * wb;
}

std::vector<Int> mul_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j].addmul(a[i], b[j]);
        }
    }
    return r;
}

std::vector<Int> mul_vectors(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < 8 || estimated_schoolbook_cost(a, b) < MUL_KRONECKER_THRESHOLD)
        return mul_schoolbook(a, b);
    return detail::mul_via_kronecker(a, b);
}

}  // namespace

IntPoly1 operator+(const IntPoly1& a, const IntPoly1& b) {
    a.check_same_var(b);
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return IntPoly1(a.is_zero() ? b.var_ : a.var_, std::move(c));
}

IntPoly1 operator-(const IntPoly1& a, const IntPoly1& b) {
    a.check_same_var(b);
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return IntPoly1(a.is_zero() ? b.var_ : a.var_, std::move(c));
}

IntPoly1 operator-(const IntPoly1& a) {
    std::vector<Int> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return IntPoly1(a.var_, std::move(c));
}

IntPoly1 operator*(const Int& s, const IntPoly1& a) {
    std::vector<Int> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return IntPoly1(a.var_, std::move(c));
}

IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b) {
    a.check_same_var(b);
    if (a.is_zero() || b.is_zero()) return IntPoly1(a.is_zero() ? b.var_ : a.var_);
    return IntPoly1(a.var_, mul_vectors(a.c_, b.c_));
}

IntPoly1 IntPoly1::pow(unsigned long e) const {
    IntPoly1 result = IntPoly1::constant(var_, Int(1));
    if (e == 0) return result;
    IntPoly1 base = *this;
    while (true) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

IntPoly1 IntPoly1::derivative() const {
    if (c_.size() <= 1) return IntPoly1(var_);
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int((long)i) * c_[i];
    return IntPoly1(var_, std::move(c));
}

Int IntPoly1::evaluate(const Int& x) const {
    Int r(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

IntPoly1 IntPoly1::compose(const IntPoly1& inner) const {
    IntPoly1 r(inner.is_zero() ? var_ : inner.var());
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * inner;
        r = r + IntPoly1::constant(r.var(), c_[i]);
    }
    return r;
}

Int IntPoly1::content() const {
    Int g(0);
    for (const Int& c : c_) {
        g = Int::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

IntPoly1 IntPoly1::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading().sign() < 0) g = -g;
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = Int::divexact(c_[i], g);
    return IntPoly1(var_, std::move(c));
}

std::string IntPoly1::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Int a = c_[i].abs();
        if (!s.empty())
            s += (c_[i].sign() < 0) ? " - " : " + ";
        else if (c_[i].sign() < 0)
            s += "-";
        bool unit = a.is_one();
        if (i == 0 || !unit) s += a.to_string();
        if (i > 0) {
            if (!unit) s += "*";
            s += var_;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<IntPoly1, IntPoly1> divrem_monic(const IntPoly1& num, const IntPoly1& den) {
    num.check_same_var(den);
    if (den.is_zero()) throw value_error("division by zero polynomial");
    if (!den.is_monic()) throw value_error("divrem_monic requires a monic divisor");
    long dn = num.degree_or(-1), dd = *den.degree();
    if (dn < dd) return {IntPoly1(num.var()), num};
    std::vector<Int> rem(num.coeffs());
    std::vector<Int> quot(dn - dd + 1);
    const auto& d = den.coeffs();
    for (long i = dn; i >= dd; --i) {
        Int q = rem[i];
        if (q.is_zero()) continue;
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j].submul(q, d[j]);
    }
    rem.resize(dd);
    return {IntPoly1(num.var(), std::move(quot)), IntPoly1(num.var(), std::move(rem))};
}

namespace {

/* classical long division over Z requiring each step to divide exactly */
IntPoly1 exact_div_schoolbook(const IntPoly1& num, const IntPoly1& den) {
    long dn = num.degree_or(-1), dd = *den.degree();
    if (dn < dd) throw exact_division_error("division not exact: degree of divisor exceeds dividend");
    std::vector<Int> rem(num.coeffs());
    std::vector<Int> quot(dn - dd + 1);
    const auto& d = den.coeffs();
    const Int& lead = den.leading();
    for (long i = dn; i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        if (!rem[i].divisible_by(lead)) throw exact_division_error("division not exact (leading step)");
        Int q = Int::divexact(rem[i], lead);
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j].submul(q, d[j]);
    }
    for (long i = 0; i < dd; ++i)
        if (!rem[i].is_zero()) throw exact_division_error("division not exact (nonzero remainder)");
    return IntPoly1(num.var(), std::move(quot));
}

/* Mignotte-style bound on the quotient coefficients of an exact division by
   a divisor with unit leading coefficient: |q_i| <= 2^deg(q) * ||num||_2. */
unsigned long quotient_bound_bits(const IntPoly1& num, long quot_deg) {
    Int norm2_sq(0);
    for (const Int& c : num.coeffs()) norm2_sq.addmul(c, c);
    return (unsigned long)quot_deg + norm2_sq.bit_size() / 2 + 4;
}

constexpr double DIV_FAST_THRESHOLD = 4.0e6;

bool fingerprint_product_check(const IntPoly1& q, const IntPoly1& den, const IntPoly1& num) {
    // Schwartz-Zippel style: evaluate q*den - num at random points mod
    // random word-size primes.  Degrees here are far below the primes.
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    for (int trial = 0; trial < 4; ++trial) {
        std::uint64_t p = 0;
        do {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            p = (seed >> 2) | (1ull << 61);
        } while (!mr_is_prime_u64(p));
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        std::uint64_t x = seed % p;
        auto eval_mod = [&](const IntPoly1& f) -> std::uint64_t {
            std::uint64_t r = 0;
            for (std::size_t i = f.coeffs().size(); i-- > 0;) {
                r = (std::uint64_t)((__uint128_t)r * x % p);
                std::uint64_t c = f.coeffs()[i].mod_ui(p);
                r = (r + c) % p;
            }
            return r;
        };
        std::uint64_t lhs = (std::uint64_t)((__uint128_t)eval_mod(q) * eval_mod(den) % p);
        if (lhs != eval_mod(num)) return false;
    }
    return true;
}

}  // namespace

IntPoly1 exact_div_bounded(const IntPoly1& num, const IntPoly1& den, unsigned long coeff_bound_bits) {
    num.check_same_var(den);
    if (den.is_zero()) throw value_error("division by zero polynomial");
    if (num.is_zero()) return IntPoly1(num.var());
    long dn = *num.degree(), dd = *den.degree();
    if (dn < dd) throw exact_division_error("division not exact: degree of divisor exceeds dividend");
    unsigned long M = coeff_bound_bits + 2;
    Int pn = detail::pack_eval(num.coeffs(), M);
    Int pd = detail::pack_eval(den.coeffs(), M);
    if (pd.is_zero()) throw value_error("division by zero polynomial");
    Int pq = Int::divexact(pn, pd);
    IntPoly1 q(num.var(), detail::signed_decode(pq, M, (std::size_t)(dn - dd) + 1));
    // the decode is only trustworthy if the division really was exact and the
    // bound really held; both are caught by the checks below
    if (q.degree_or(-1) != dn - dd) throw exact_division_error("division not exact (degree mismatch)");
    if (q.leading() * den.leading() != num.leading())
        throw exact_division_error("division not exact (leading coefficient)");
    if (q.coeff(0) * den.coeff(0) != num.coeff(0))
        throw exact_division_error("division not exact (constant coefficient)");
    if (!fingerprint_product_check(q, den, num))
        throw exact_division_error("division not exact (product check failed)");
    return q;
}

IntPoly1 exact_div(const IntPoly1& num, const IntPoly1& den) {
    num.check_same_var(den);
    if (den.is_zero()) throw value_error("division by zero polynomial");
    if (num.is_zero()) return IntPoly1(num.var());
    long dn = *num.degree(), dd = *den.degree();
    double cost = (double)(dn - dd + 1) * (double)(dd + 1) *
                  ((double)detail::max_coeff_bits(num.coeffs()) / 64.0 + 1.0);
    if (cost < DIV_FAST_THRESHOLD) {
        IntPoly1 q = exact_div_schoolbook(num, den);
        if (q * den != num) throw exact_division_error("division not exact (re-multiplication)");
        return q;
    }
    bool unit_lead = den.leading().is_one() || den.leading() == Int(-1);
    if (!unit_lead) {
        IntPoly1 q = exact_div_schoolbook(num, den);
        if (!fingerprint_product_check(q, den, num))
            throw exact_division_error("division not exact (product check failed)");
        return q;
    }
    return exact_div_bounded(num, den, quotient_bound_bits(num, dn - dd));
}

/* ---- resultants ---- */

namespace {

/* pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R */
IntPoly1 prem(const IntPoly1& A, const IntPoly1& B) {
    long da = *A.degree(), db = *B.degree();
    long e = da - db + 1;
    const auto& b = B.coeffs();
    const Int& lb = B.leading();
    std::vector<Int> r(A.coeffs());
    while (true) {
        long dr = (long)r.size() - 1;
        while (dr >= 0 && r[(std::size_t)dr].is_zero()) --dr;
        if (dr < db) {
            r.resize(dr + 1);
            break;
        }
        // r <- lb*r - lc(r) * x^(dr-db) * B   (top term cancels)
        Int top = r[(std::size_t)dr];
        for (long j = 0; j < dr; ++j) r[(std::size_t)j] *= lb;
        r[(std::size_t)dr] = Int(0);
        for (long j = 0; j < db; ++j) r[(std::size_t)(dr - db + j)].submul(top, b[(std::size_t)j]);
        --e;
    }
    IntPoly1 R(A.var(), std::move(r));
    if (e > 0) R = lb.pow((unsigned long)e) * R;
    return R;
}

}  // namespace

Int resultant(const IntPoly1& f, const IntPoly1& g) {
    f.check_same_var(g);
    if (f.is_zero() || g.is_zero()) throw value_error("resultant of zero polynomial");
    long df = *f.degree(), dg = *g.degree();
    if (df == 0 && dg == 0) return Int(1);
    if (df == 0) return f.coeffs()[0].pow((unsigned long)dg);
    if (dg == 0) return g.coeffs()[0].pow((unsigned long)df);

    // When one argument is monic and much smaller, reduce the other first:
    // res(f, g) = (-1)^(df*dg) res(g, f) and res(g, f) = res(g, f mod g) for
    // monic g (no leading-coefficient correction).
    if (dg < df && g.is_monic() && (double)df * dg > 4096.0) {
        IntPoly1 r = divrem_monic(f, g).second;
        if (r.is_zero()) return Int(0);
        Int res = resultant(g, r);
        if ((df & 1) && (dg & 1)) res = -res;
        return res;
    }
    if (df < dg && f.is_monic() && (double)df * dg > 4096.0) {
        IntPoly1 r = divrem_monic(g, f).second;
        if (r.is_zero()) return Int(0);
        return resultant(f, r);
    }

    // subresultant polynomial remainder sequence
    IntPoly1 A = f, B = g;
    int s = 1;
    if (df < dg) {
        std::swap(A, B);
        if ((df & 1) && (dg & 1)) s = -s;
    }
    Int g_ = Int(1), h = Int(1);
    while (true) {
        long da = *A.degree(), db = *B.degree();
        long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IntPoly1 R = prem(A, B);
        if (R.is_zero()) {
            if (db > 0) return Int(0);  // nonconstant common factor
        }
        A = B;
        // B <- R / (g * h^delta)
        Int divisor = g_ * h.pow((unsigned long)delta);
        {
            std::vector<Int> c(R.coeffs().size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = Int::divexact(R.coeffs()[i], divisor);
            B = IntPoly1(A.var(), std::move(c));
        }
        g_ = A.leading();
        // h <- g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g_;
        } else {
            Int num = g_.pow((unsigned long)delta);
            h = Int::divexact(num, h.pow((unsigned long)(delta - 1)));
        }
        if (B.is_zero()) return Int(0);
        if (B.degree_or(0) == 0) {
            long dA = *A.degree();
            // res = s * B^degA / h^(degA - 1)
            Int num = B.coeffs()[0].pow((unsigned long)dA);
            Int res = dA >= 1 ? Int::divexact(num, h.pow((unsigned long)(dA - 1))) : num;
            return s > 0 ? res : -res;
        }
    }
}

Int resultant_sylvester(const IntPoly1& f, const IntPoly1& g) {
    f.check_same_var(g);
    if (f.is_zero() || g.is_zero()) throw value_error("resultant of zero polynomial");
    long m = *f.degree(), n = *g.degree();
    if (m == 0 && n == 0) return Int(1);
    if (m == 0) return f.coeffs()[0].pow((unsigned long)n);
    if (n == 0) return g.coeffs()[0].pow((unsigned long)m);
    long N = m + n;
    std::vector<std::vector<Int>> M((std::size_t)N, std::vector<Int>((std::size_t)N));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) M[r][r + j] = f.coeffs()[m - j];
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) M[n + r][r + j] = g.coeffs()[n - j];
    // Bareiss fraction-free elimination
    Int prev(1);
    int sign = 1;
    for (long k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            long pivot = -1;
            for (long r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i) {
            for (long j = k + 1; j < N; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = Int::divexact(t, prev);
            }
            M[i][k] = Int(0);
        }
        prev = M[k][k];
    }
    Int det = M[N - 1][N - 1];
    return sign > 0 ? det : -det;
}

IntPoly1 poly_gcd(const IntPoly1& f, const IntPoly1& g) {
    f.check_same_var(g);
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly1 A = f.primitive_part(), B = g.primitive_part();
    if (*A.degree() < *B.degree()) std::swap(A, B);
    Int cont = Int::gcd(f.content(), g.content());
    while (!B.is_zero() && *B.degree() > 0) {
        IntPoly1 R = prem(A, B).primitive_part();
        A = B;
        B = R;
    }
    if (!B.is_zero()) return IntPoly1::constant(f.var(), cont);  // coprime
    IntPoly1 result = cont * A;
    if (result.leading().sign() < 0) result = -result;
    return result;
}

ModPoly reduce_mod(const IntPoly1& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw value_error("modulus " + std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i].mod_ui(p);
    return ModPoly(p, std::move(c));
}

}  // namespace dynirr
