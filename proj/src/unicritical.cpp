#include "dynirr/unicritical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>

#include "dynirr/detail/kronecker.hpp"

namespace dynirr::uni {

namespace {

/* log2(3) rounded up; the coefficient bound for monic factors with all
   roots in |a| <= 2 is binom(n,i) 2^(n-i) <= 3^n */
constexpr double LOG2_3 = 1.5849625007211563;

/* explicit-polynomial route while deg P_{k+n-1} stays below this */
constexpr long PLAIN_ROUTE_ORBIT_DEGREE = 700;

/* exact identity checks switch from explicit polynomials to packed
   evaluation at this product degree */
constexpr long EXACT_AT_T_PRODUCT_CAP = 24000;

unsigned long bound_bits_for_degree(long deg) {
    return (unsigned long)((double)deg * LOG2_3) + 16;
}

}  // namespace

long default_budget() {
    if (const char* env = std::getenv("DYNIRR_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 5000;
}

Context::Context(long D, long budget) : D_(D), budget_(budget) {
    if (D < 2) throw value_error("degree D must be at least 2");
    if (budget < 1) throw value_error("budget must be positive");
    long p = 0, e = 0;
    if (prime_power_decompose(D, &p, &e)) {
        p_ = p;
        e_ = e;
    }
}

Int Context::N(long k) const {
    if (k < 0) throw value_error("N_k needs k >= 0");
    Int num = Int(D_).pow((unsigned long)k) - Int(1);
    return Int::divexact(num, Int(D_ - 1));
}

long Context::N_long(long k) const {
    Int v = N(k);
    if (!v.fits_slong()) throw budget_error("N_" + std::to_string(k) + " exceeds machine range");
    return v.get_slong();
}

void Context::check_budget(long orbit_index) const {
    Int deg = N(orbit_index - 1);
    if (deg > Int(budget_))
        throw budget_error("orbit polynomial degree " + deg.to_string() + " exceeds budget " +
                           std::to_string(budget_));
}

const IntPoly1& Context::P(long n) const {
    if (n < 1) throw value_error("P_n needs n >= 1");
    check_budget(n);
    std::lock_guard<std::recursive_mutex> lock(cache_mu_);
    auto it = P_.find(n);
    if (it != P_.end()) return it->second;
    if (n == 1) return P_.emplace(1, IntPoly1::constant("a", Int(1))).first->second;
    const IntPoly1& prev = P(n - 1);
    IntPoly1 next = IntPoly1::variable("a") * prev.pow((unsigned long)D_) +
                    IntPoly1::constant("a", Int(1));
    return P_.emplace(n, std::move(next)).first->second;
}

const IntPoly1& Context::R(long n) const {
    if (n < 1) throw value_error("R_n needs n >= 1");
    std::lock_guard<std::recursive_mutex> lock(cache_mu_);
    auto it = R_.find(n);
    if (it != R_.end()) return it->second;
    IntPoly1 num = IntPoly1::constant("a", Int(1));
    IntPoly1 den = IntPoly1::constant("a", Int(1));
    for (long m : divisors_of(n)) {
        int mu = mobius(n / m);
        if (mu == 1) num = num * P(m);
        if (mu == -1) den = den * P(m);
    }
    IntPoly1 r = exact_div(num, den);
    return R_.emplace(n, std::move(r)).first->second;
}

BinaryForm form_for(const Context& ctx, std::optional<long> d) {
    if (!d) return BinaryForm::power_sum(ctx.D());
    if (*d < 2 || ctx.D() % *d != 0)
        throw value_error("d must be a divisor of D with d >= 2");
    return BinaryForm::cyclotomic(*d);
}

long factor_degree(const Context& ctx, long k, long n, std::optional<long> d) {
    long phi = d ? totient(*d) : ctx.D() - 1;
    Int deg(0);
    for (long m : divisors_of(n)) {
        int mu = mobius(n / m);
        if (mu == 0) continue;
        Int part = ctx.N(k + m - 2) - ctx.N(std::gcd(m, k - 1) - 1);
        if (mu == 1)
            deg += part;
        else
            deg -= part;
    }
    deg *= Int(phi);
    if (!deg.fits_slong()) throw budget_error("factor degree exceeds machine range");
    return deg.get_slong();
}

/* ---- generic pipeline over three coefficient rings --------------------
   The same Mobius assembly runs over (a) explicit integer polynomials,
   (b) integers at t = 2^M, (c) F_q polynomials.  Each environment supplies
   the ring ops used by the recursion and by the form evaluation. */

namespace {

struct PolyEnv {
    using Ring = IntPoly1;
    Ring one() const { return IntPoly1::constant("a", Int(1)); }
    Ring var_times(const Ring& x) const { return IntPoly1::variable("a") * x; }
    Ring mul(const Ring& x, const Ring& y) const { return x * y; }
    Ring add(const Ring& x, const Ring& y) const { return x + y; }
    Ring pow(const Ring& x, unsigned long e) const { return x.pow(e); }
    Ring scale(const Int& c, const Ring& x) const { return c * x; }
    Ring div(const Ring& num, const Ring& den) const { return exact_div(num, den); }
    bool eq(const Ring& x, const Ring& y) const { return x == y; }
};

struct IntAtTEnv {
    unsigned long M;
    using Ring = Int;
    Ring one() const { return Int(1); }
    Ring var_times(const Ring& x) const {
        Int r;
        mpz_mul_2exp(r.raw(), x.raw(), M);
        return r;
    }
    Ring mul(const Ring& x, const Ring& y) const { return x * y; }
    Ring add(const Ring& x, const Ring& y) const { return x + y; }
    Ring pow(const Ring& x, unsigned long e) const { return x.pow(e); }
    Ring scale(const Int& c, const Ring& x) const { return c * x; }
    Ring div(const Ring& num, const Ring& den) const {
        // divisibility is not pre-checked at this size; a wrong quotient is
        // caught by the independent F_q reconstruction downstream
        if (den.is_zero()) throw value_error("division by zero");
        return Int::divexact(num, den);
    }
    bool eq(const Ring& x, const Ring& y) const { return x == y; }
};

struct ModEnv {
    std::uint64_t q;
    using Ring = ModPoly;
    Ring one() const { return ModPoly::constant(q, 1); }
    Ring var_times(const Ring& x) const { return ModPoly::variable(q) * x; }
    Ring mul(const Ring& x, const Ring& y) const { return x * y; }
    Ring add(const Ring& x, const Ring& y) const { return x + y; }
    Ring pow(const Ring& x, unsigned long e) const { return x.pow(e); }
    Ring scale(const Int& c, const Ring& x) const { return x.scaled(c.mod_ui(q)); }
    Ring div(const Ring& num, const Ring& den) const { return exact_div(num, den); }
    bool eq(const Ring& x, const Ring& y) const { return x == y; }
};

template <class Env>
std::vector<typename Env::Ring> build_orbit(const Env& env, long D, long jmax) {
    std::vector<typename Env::Ring> P;
    P.reserve((std::size_t)jmax + 1);
    P.push_back(env.one());  // unused slot 0
    P.push_back(env.one());  // P_1 = 1
    for (long j = 1; j < jmax; ++j)
        P.push_back(env.add(env.var_times(env.pow(P.back(), (unsigned long)D)), env.one()));
    return P;
}

/* memoized power ladder: pow(2j) = pow(j)^2, pow(2j+1) = pow(2j)*X */
template <class Env>
const typename Env::Ring& ladder_pow(const Env& env, const typename Env::Ring& X, long e,
                                     std::map<long, typename Env::Ring>& cache) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    typename Env::Ring v = env.one();
    if (e == 1)
        v = X;
    else if (e % 2 == 0)
        v = env.mul(ladder_pow(env, X, e / 2, cache), ladder_pow(env, X, e / 2, cache));
    else
        v = env.mul(ladder_pow(env, X, e - 1, cache), X);
    return cache.emplace(e, std::move(v)).first->second;
}

template <class Env>
typename Env::Ring eval_form(const Env& env, const BinaryForm& form, const typename Env::Ring& X,
                             const typename Env::Ring& Y) {
    long n = form.degree();
    long nonzero = 0;
    for (const Int& c : form.coeffs())
        if (!c.is_zero()) ++nonzero;
    if (2 * nonzero > n + 1) {
        // dense form: Horner in X with a running Y-power tail
        typename Env::Ring ypow = env.one();
        std::vector<typename Env::Ring> tail;
        tail.reserve((std::size_t)n + 1);
        for (long i = 0; i <= n; ++i) {
            tail.push_back(env.scale(form.coeffs()[(std::size_t)(n - i)], ypow));
            if (i < n) ypow = env.mul(ypow, Y);
        }
        typename Env::Ring r = tail[0];
        for (long i = 1; i <= n; ++i) r = env.add(env.mul(r, X), tail[(std::size_t)i]);
        return r;
    }
    // sparse form: sum only the nonzero monomials, sharing power ladders
    std::map<long, typename Env::Ring> xpows, ypows;
    xpows.emplace(0, env.one());
    ypows.emplace(0, env.one());
    bool first = true;
    typename Env::Ring r = env.one();
    for (long i = n; i >= 0; --i) {
        const Int& c = form.coeffs()[(std::size_t)i];
        if (c.is_zero()) continue;
        typename Env::Ring term =
            env.mul(ladder_pow(env, X, i, xpows), ladder_pow(env, Y, n - i, ypows));
        if (!c.is_one()) term = env.scale(c, term);
        if (first) {
            r = std::move(term);
            first = false;
        } else {
            r = env.add(r, term);
        }
    }
    return r;
}

/* R_{k,n,form} as NUM/DEN with the Mobius split */
template <class Env>
typename Env::Ring factor_image(const Env& env, long /*D*/, long k, long n, const BinaryForm& form,
                                const std::vector<typename Env::Ring>& P) {
    unsigned long phi = (unsigned long)form.degree();
    typename Env::Ring num = env.one();
    typename Env::Ring den = env.one();
    for (long m : divisors_of(n)) {
        int mu = mobius(n / m);
        if (mu == 0) continue;
        typename Env::Ring pk = eval_form(env, form, P[(std::size_t)(k + m - 1)], P[(std::size_t)(k - 1)]);
        long g = std::gcd(m, k - 1);
        typename Env::Ring pg = env.pow(P[(std::size_t)g], phi);
        if (mu == 1) {
            num = env.mul(num, pk);
            den = env.mul(den, pg);
        } else {
            num = env.mul(num, pg);
            den = env.mul(den, pk);
        }
    }
    return env.div(num, den);
}

/* value of P_{k,n,form} */
template <class Env>
typename Env::Ring product_image(const Env& env, long k, long n, const BinaryForm& form,
                                 const std::vector<typename Env::Ring>& P) {
    return eval_form(env, form, P[(std::size_t)(k + n - 1)], P[(std::size_t)(k - 1)]);
}

/* verified 61/62-bit primes for the independent mod-q reconstruction check */
constexpr std::uint64_t CHECK_PRIME = 2305843009213693951ull;  // 2^61 - 1

/* complex values with a wide software exponent; enough to evaluate the
   factor formulas on the unit circle where magnitudes reach 2^(10^5) */
struct ScaledC {
    std::complex<double> m{0.0, 0.0};
    long e = 0;
    void norm() {
        double a = std::abs(m);
        if (a == 0.0 || !std::isfinite(a)) {
            if (a == 0.0) e = 0;
            return;
        }
        int ex = 0;
        std::frexp(a, &ex);
        m = std::complex<double>(std::ldexp(m.real(), -ex), std::ldexp(m.imag(), -ex));
        e += ex;
    }
    static ScaledC from(std::complex<double> v) {
        ScaledC s;
        s.m = v;
        s.norm();
        return s;
    }
    bool is_zero() const { return m.real() == 0.0 && m.imag() == 0.0; }
    double log2abs() const {
        if (is_zero()) return -1e18;
        return (double)e + std::log2(std::abs(m));
    }
    friend ScaledC operator*(const ScaledC& a, const ScaledC& b) {
        ScaledC r;
        r.m = a.m * b.m;
        r.e = a.e + b.e;
        r.norm();
        return r;
    }
    friend ScaledC operator/(const ScaledC& a, const ScaledC& b) {
        ScaledC r;
        r.m = a.m / b.m;
        r.e = a.e - b.e;
        r.norm();
        return r;
    }
    friend ScaledC operator+(const ScaledC& a, const ScaledC& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const ScaledC& hi = (a.e >= b.e) ? a : b;
        const ScaledC& lo = (a.e >= b.e) ? b : a;
        long shift = hi.e - lo.e;
        ScaledC r = hi;
        if (shift < 120) {
            r.m = hi.m + std::complex<double>(std::ldexp(lo.m.real(), (int)-shift),
                                              std::ldexp(lo.m.imag(), (int)-shift));
        }
        r.norm();
        return r;
    }
};

struct ScaledEnv {
    std::complex<double> z;  // the evaluation point on |z| = 1
    using Ring = ScaledC;
    Ring one() const { return ScaledC::from({1.0, 0.0}); }
    Ring var_times(const Ring& x) const { return ScaledC::from(z) * x; }
    Ring mul(const Ring& x, const Ring& y) const { return x * y; }
    Ring add(const Ring& x, const Ring& y) const { return x + y; }
    Ring pow(const Ring& x, unsigned long n) const {
        Ring r = one();
        Ring b = x;
        unsigned long e = n;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Ring scale(const Int& c, const Ring& x) const { return ScaledC::from({c.get_double(), 0.0}) * x; }
    Ring div(const Ring& num, const Ring& den) const { return num / den; }
    bool eq(const Ring&, const Ring&) const { return true; }
};

/* Cauchy estimate of the coefficient sizes of R_{k,n,d}: every coefficient
   is bounded by max over |z| = 1 of |R(z)|.  The maximum is sampled in
   scaled-double arithmetic, so the returned bit count carries a generous
   slack and is clamped by the rigorous 3^degree bound; a shortfall is
   caught downstream (decode checks plus the F_q reconstruction) and the
   caller retries with the rigorous bound. */
unsigned long estimated_bound_bits(long D, long k, long n, const BinaryForm& form, long degR,
                                   unsigned long rigorous) {
    double peak = 0.0;
    const double pi = 3.14159265358979323846;
    const int samples = 64;
    for (int s = 0; s < samples; ++s) {
        double theta = 2.0 * pi * (s + 0.31) / samples;
        ScaledEnv env{std::polar(1.0, theta)};
        auto P = build_orbit(env, D, k + n - 1);
        ScaledC val = factor_image(env, D, k, n, form, P);
        peak = std::max(peak, val.log2abs());
    }
    if (!(peak > 0.0)) return rigorous;
    double bits = peak + std::log2((double)degR + 2.0) + 192.0;
    if (bits >= (double)rigorous) return rigorous;
    return (unsigned long)bits;
}

/* reduce with a Miller-Rabin verified modulus (internal check primes are
   too large for the trial-division front door) */
ModPoly reduce_to(const IntPoly1& f, std::uint64_t q) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i].mod_ui(q);
    return ModPoly(q, std::move(c));
}

IntPoly1 decode_factor(const Int& packed, unsigned long M, long expected_degree) {
    IntPoly1 f("a", detail::signed_decode(packed, M, (std::size_t)expected_degree + 1));
    if (f.degree_or(-1) != expected_degree)
        throw error("preperiodic factor: decoded degree " + std::to_string(f.degree_or(-1)) +
                    " != predicted " + std::to_string(expected_degree));
    if (!f.is_monic()) throw error("preperiodic factor: decoded polynomial is not monic");
    return f;
}

Factor build_factor(const Context& ctx, long k, long n, std::optional<long> d) {
    if (k < 2) throw value_error("preperiodic factors need k >= 2");
    if (n < 1) throw value_error("preperiodic factors need n >= 1");
    ctx.check_budget(k + n - 1);
    BinaryForm form = form_for(ctx, d);
    long degR = factor_degree(ctx, k, n, d);
    Factor out;
    out.k = k;
    out.n = n;
    out.d = d;
    out.phi = form.degree();
    if (ctx.N_long(k + n - 2) <= PLAIN_ROUTE_ORBIT_DEGREE) {
        PolyEnv env;
        auto P = build_orbit(env, ctx.D(), k + n - 1);
        out.poly = factor_image(env, ctx.D(), k, n, form, P);
        if (out.poly.degree_or(-1) != degR)
            throw error("preperiodic factor: degree " + std::to_string(out.poly.degree_or(-1)) +
                        " != predicted " + std::to_string(degR));
        return out;
    }
    auto attempt = [&](unsigned long M) {
        IntAtTEnv env{M};
        auto P = build_orbit(env, ctx.D(), k + n - 1);
        Int packed = factor_image(env, ctx.D(), k, n, form, P);
        IntPoly1 poly = decode_factor(packed, env.M, degR);
        // Independent reconstruction over F_q. A wrapped slot shifts some
        // coefficient by a small multiple of 2^M, which can never vanish
        // mod an odd prime, so a shortfall of M is detected with certainty.
        ModEnv menv{CHECK_PRIME};
        auto Pq = build_orbit(menv, ctx.D(), k + n - 1);
        ModPoly direct = factor_image(menv, ctx.D(), k, n, form, Pq);
        if (!(reduce_to(poly, menv.q) == direct))
            throw error("preperiodic factor: packed construction disagrees with F_q image");
        return poly;
    };
    unsigned long rigorous = bound_bits_for_degree(degR);
    unsigned long first = estimated_bound_bits(ctx.D(), k, n, form, degR, rigorous);
    try {
        out.poly = attempt(first);
    } catch (const error&) {
        if (first >= rigorous) throw;
        out.poly = attempt(rigorous);
    }
    return out;
}

}  // namespace

Factor preperiodic_factor(const Context& ctx, long k, long n, long d) {
    if (d < 2 || ctx.D() % d != 0) throw value_error("d must divide D with d >= 2");
    return build_factor(ctx, k, n, d);
}

Factor aggregate_factor(const Context& ctx, long k, long n) { return build_factor(ctx, k, n, std::nullopt); }

IntPoly1 preperiodic_product(const Context& ctx, long k, long n, std::optional<long> d) {
    if (k < 2 || n < 1) throw value_error("preperiodic products need k >= 2, n >= 1");
    ctx.check_budget(k + n - 1);
    BinaryForm form = form_for(ctx, d);
    PolyEnv env;
    auto P = build_orbit(env, ctx.D(), k + n - 1);
    return product_image(env, k, n, form, P);
}

/* ---- identity verification -------------------------------------------- */

namespace {

template <class Env>
bool factorization_identity_holds(const Env& env, const Context& ctx, long k, long n,
                                  std::optional<long> d, FactorLookup factors_by_m,
                                  const std::vector<typename Env::Ring>& P,
                                  typename Env::Ring (*lift)(const Env&, const IntPoly1&)) {
    BinaryForm form = form_for(ctx, d);
    unsigned long phi = (unsigned long)form.degree();
    typename Env::Ring lhs = env.pow(P[(std::size_t)std::gcd(n, k - 1)], phi);
    for (long m : divisors_of(n)) {
        auto it = factors_by_m.find(m);
        if (it == factors_by_m.end()) throw value_error("missing factor for m = " + std::to_string(m));
        lhs = env.mul(lhs, lift(env, it->second->poly));
    }
    typename Env::Ring rhs = product_image(env, k, n, form, P);
    return env.eq(lhs, rhs);
}

IntPoly1 lift_poly(const PolyEnv&, const IntPoly1& f) { return f; }
Int lift_at_t(const IntAtTEnv& env, const IntPoly1& f) { return detail::pack_eval(f.coeffs(), env.M); }
ModPoly lift_mod(const ModEnv& env, const IntPoly1& f) { return reduce_to(f, env.q); }

}  // namespace

bool verify_factorization_exact(const Context& ctx, long k, long n, std::optional<long> d,
                                FactorLookup factors_by_m) {
    BinaryForm form = form_for(ctx, d);
    long prod_degree = form.degree() * ctx.N_long(k + n - 2);
    if (prod_degree <= EXACT_AT_T_PRODUCT_CAP && ctx.N_long(k + n - 2) <= PLAIN_ROUTE_ORBIT_DEGREE) {
        PolyEnv env;
        auto P = build_orbit(env, ctx.D(), k + n - 1);
        return factorization_identity_holds(env, ctx, k, n, d, factors_by_m, P, &lift_poly);
    }
    if (prod_degree > EXACT_AT_T_PRODUCT_CAP)
        throw budget_error("exact identity check beyond the packed-evaluation cap; use the mod-q form");
    IntAtTEnv env{bound_bits_for_degree(prod_degree)};
    auto P = build_orbit(env, ctx.D(), k + n - 1);
    return factorization_identity_holds(env, ctx, k, n, d, factors_by_m, P, &lift_at_t);
}

bool verify_factorization_mod_q(const Context& ctx, long k, long n, std::optional<long> d,
                                FactorLookup factors_by_m, std::uint64_t q) {
    if (!mr_is_prime_u64(q)) throw value_error("check modulus must be prime");
    ModEnv env{q};
    auto P = build_orbit(env, ctx.D(), k + n - 1);
    return factorization_identity_holds(env, ctx, k, n, d, factors_by_m, P, &lift_mod);
}

namespace {

template <class Env>
bool power_sum_forms_agree(const Env& env, const Context& ctx, long k, long n) {
    auto P = build_orbit(env, ctx.D(), k + n - 1);
    const auto& X = P[(std::size_t)(k + n - 1)];
    const auto& Y = P[(std::size_t)(k - 1)];
    typename Env::Ring summation =
        eval_form(env, BinaryForm::power_sum(ctx.D()), X, Y);
    typename Env::Ring diff_num = env.add(env.pow(X, (unsigned long)ctx.D()),
                                          env.scale(Int(-1), env.pow(Y, (unsigned long)ctx.D())));
    typename Env::Ring diff_den = env.add(X, env.scale(Int(-1), Y));
    typename Env::Ring quotient = env.div(diff_num, diff_den);
    return env.eq(summation, quotient);
}

}  // namespace

bool verify_power_sum_forms(const Context& ctx, long k, long n) {
    ctx.check_budget(k + n - 1);
    long prod_degree = (ctx.D() - 1) * ctx.N_long(k + n - 2);
    if (prod_degree > EXACT_AT_T_PRODUCT_CAP)
        throw budget_error("power-sum dual route beyond the explicit cap; use the mod-q form");
    PolyEnv env;
    return power_sum_forms_agree(env, ctx, k, n);
}

bool verify_power_sum_forms_mod_q(const Context& ctx, long k, long n, std::uint64_t q) {
    if (!mr_is_prime_u64(q)) throw value_error("check modulus must be prime");
    ModEnv env{q};
    return power_sum_forms_agree(env, ctx, k, n);
}

bool verify_aggregate_splits(const Context& /*ctx*/, const Factor& aggregate,
                             const std::vector<const Factor*>& per_d) {
    long deg = aggregate.poly.degree_or(0);
    long sum = 0;
    for (const Factor* f : per_d) sum += f->poly.degree_or(0);
    if (sum != deg) return false;
    if (deg <= EXACT_AT_T_PRODUCT_CAP / 2) {
        IntPoly1 prod = IntPoly1::constant("a", Int(1));
        for (const Factor* f : per_d) prod = prod * f->poly;
        return prod == aggregate.poly;
    }
    unsigned long M = bound_bits_for_degree(deg);
    Int lhs(1);
    for (const Factor* f : per_d) lhs *= detail::pack_eval(f->poly.coeffs(), M);
    return lhs == detail::pack_eval(aggregate.poly.coeffs(), M);
}

/* ---- resultant lemma --------------------------------------------------- */

ResultantWitness check_resultant_lemma(const Context& ctx, long k, long m, long d, long n) {
    Factor rkmd = preperiodic_factor(ctx, k, m, d);
    const IntPoly1& rn = ctx.R(n);
    ResultantWitness w;
    w.k = k;
    w.m = m;
    w.d = d;
    w.n = n;
    w.value = resultant(rkmd.poly, rn);
    long p = 0, e = 0;
    bool dpp = prime_power_decompose(d, &p, &e);
    w.diagonal_case = (n == m) && dpp;
    w.expected_abs = w.diagonal_case ? Int(p).pow((unsigned long)rn.degree_or(0)) : Int(1);
    w.matches = (w.value.abs() == w.expected_abs);
    return w;
}

/* ---- mod-p structure ---------------------------------------------------- */

ModPoly orbit_mod_p(const Context& ctx, long n) {
    ctx.require_prime_power();
    ctx.check_budget(n);
    std::uint64_t p = (std::uint64_t)ctx.p();
    std::vector<std::uint64_t> c((std::size_t)ctx.N_long(n - 1) + 1, 0);
    for (long i = 0; i < n; ++i) c[(std::size_t)ctx.N_long(i)] += 1;  // exponents N_i are distinct
    return ModPoly(p, std::move(c));
}

ModPoly gleason_mod_p(const Context& ctx, long n) {
    ctx.require_prime_power();
    std::uint64_t p = (std::uint64_t)ctx.p();
    ModPoly num = ModPoly::constant(p, 1);
    ModPoly den = ModPoly::constant(p, 1);
    for (long m : divisors_of(n)) {
        int mu = mobius(n / m);
        if (mu == 1) num = num * orbit_mod_p(ctx, m);
        if (mu == -1) den = den * orbit_mod_p(ctx, m);
    }
    return exact_div(num, den);
}

ModPoly factor_mod_p(const Context& ctx, long k, long n, std::optional<long> d) {
    ctx.require_prime_power();
    if (k < 2 || n < 1) throw value_error("factor_mod_p needs k >= 2, n >= 1");
    ctx.check_budget(k + n - 1);
    std::uint64_t p = (std::uint64_t)ctx.p();
    long phi = d ? totient(*d) : ctx.D() - 1;
    if (d && (*d < 2 || ctx.D() % *d != 0)) throw value_error("d must divide D with d >= 2");
    // Phi_{p^m}(X, Y) == (X - Y)^phi mod p, and the aggregate form likewise
    ModPoly num = ModPoly::constant(p, 1);
    ModPoly den = ModPoly::constant(p, 1);
    for (long m : divisors_of(n)) {
        int mu = mobius(n / m);
        if (mu == 0) continue;
        ModPoly pk = (orbit_mod_p(ctx, k + m - 1) - orbit_mod_p(ctx, k - 1)).pow((unsigned long)phi);
        ModPoly pg = orbit_mod_p(ctx, std::gcd(m, k - 1)).pow((unsigned long)phi);
        if (mu == 1) {
            num = num * pk;
            den = den * pg;
        } else {
            num = num * pg;
            den = den * pk;
        }
    }
    return exact_div(num, den);
}

ModPoly factor_image_mod_q(const Context& ctx, long k, long n, std::optional<long> d,
                           std::uint64_t q) {
    if (!mr_is_prime_u64(q)) throw value_error("check modulus must be prime");
    if (k < 2 || n < 1) throw value_error("factor images need k >= 2, n >= 1");
    ctx.check_budget(k + n - 1);
    ModEnv env{q};
    auto P = build_orbit(env, ctx.D(), k + n - 1);
    return factor_image(env, ctx.D(), k, n, form_for(ctx, d), P);
}

long expected_modp_exponent(const Context& ctx, long k, long n) {
    ctx.require_prime_power();
    long D = ctx.D();
    if (n == 1) {
        Int v = Int(D - 1) * ctx.N(k - 1);
        return v.get_slong();
    }
    Int dk1 = Int(D).pow((unsigned long)(k - 1));
    Int v = ((k - 1) % n == 0) ? Int(D - 1) * (dk1 - Int(1)) : Int(D - 1) * dk1;
    if (!v.fits_slong()) throw budget_error("mod-p exponent exceeds machine range");
    return v.get_slong();
}

ModpPowerReport check_modp_power(const Context& ctx, long k, long n, std::optional<long> d) {
    ctx.require_prime_power();
    ModpPowerReport rep;
    rep.k = k;
    rep.n = n;
    rep.d = d;
    ModPoly image = factor_mod_p(ctx, k, n, d);
    std::uint64_t p = (std::uint64_t)ctx.p();
    ModPoly base = (n == 1) ? ModPoly::variable(p) : gleason_mod_p(ctx, n);
    auto pow = as_power_of(image, base);
    if (pow) {
        rep.is_power = true;
        rep.exponent = pow->exponent;
        rep.scalar = pow->scalar;
    }
    if (!d) rep.expected_exponent = expected_modp_exponent(ctx, k, n);
    rep.matches = rep.is_power && rep.scalar == 1 &&
                  (!rep.expected_exponent || rep.exponent == *rep.expected_exponent);
    return rep;
}

bool check_orbit_difference(const Context& ctx, long k) {
    ctx.require_prime_power();
    if (k < 1) throw value_error("check_orbit_difference needs k >= 1");
    std::uint64_t p = (std::uint64_t)ctx.p();
    ModPoly diff = reduce_mod(ctx.P(k + 1) - ctx.P(k), p);
    ModPoly expect = ModPoly::monomial(p, 1, (std::size_t)ctx.N_long(k));
    return diff == expect;
}

GleasonReport check_gleason(const Context& ctx, long n) {
    const IntPoly1& pn = ctx.P(n);
    GleasonReport rep;
    rep.n = n;
    long deg = pn.degree_or(0);
    if (deg < 1) {
        // P_1 = 1: empty discriminant, taken as 1
        rep.disc = Int(1);
    } else {
        Int res = resultant(pn, pn.derivative());
        // disc = (-1)^(deg(deg-1)/2) res / lc; P_n is monic
        bool flip = ((deg * (deg - 1) / 2) % 2) != 0;
        rep.disc = flip ? -res : res;
    }
    long r = (long)rep.disc.mod_ui((unsigned long)ctx.D());
    rep.residue = r;
    rep.ok = (r == 1 % ctx.D());
    return rep;
}

std::vector<SurveyRow> fp_survey(const std::vector<long>& Ds, long n_max) {
    std::vector<SurveyRow> rows;
    for (long D : Ds) {
        Context ctx(D, std::max(default_budget(), (long)1000000));
        ctx.require_prime_power();
        for (long n = 2; n <= n_max; ++n) {
            SurveyRow row;
            row.D = D;
            row.n = n;
            row.p = ctx.p();
            row.e = ctx.e();
            ModPoly rn = gleason_mod_p(ctx, n);
            row.deg_rn = rn.degree_or(0);
            long ne = n * ctx.e();
            row.degree_divides = row.deg_rn > 0 && (ne % row.deg_rn == 0);
            row.frobenius_ok = frobenius_period_check(rn, D, n);
            row.irreducible = is_irreducible(rn);
            row.expected_irreducible = (n == 2) || (n == 3 && (D == 2 || D == 8));
            row.matches = (row.irreducible == row.expected_irreducible);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<SpecialCaseItem> special_cases_check(const Context& ctx) {
    std::vector<SpecialCaseItem> items;
    long D = ctx.D();
    IntPoly1 a_plus_1("a", {Int(1), Int(1)});
    IntPoly1 one = IntPoly1::constant("a", Int(1));
    for (long d : divisors_of(D)) {
        if (d < 2) continue;
        Factor f = preperiodic_factor(ctx, 2, 1, d);
        IntPoly1 closed = BinaryForm::cyclotomic(d).eval(a_plus_1, one);
        items.push_back({"R_{2,1,d} == Phi_d(a+1,1)", D, d, f.poly == closed});
    }
    if (D % 2 == 0) {
        {
            // b^(2d+1) - b^(2d) + b + 1 at b = a+1, with 2d = D
            std::vector<Int> c((std::size_t)D + 2);
            c[(std::size_t)D + 1] = Int(1);
            c[(std::size_t)D] = Int(-1);
            c[1] = Int(1);
            c[0] = Int(1);
            IntPoly1 closed = IntPoly1("b", std::move(c)).compose(a_plus_1);
            Factor f = preperiodic_factor(ctx, 3, 1, 2);
            items.push_back({"R_{3,1,2} quadrinomial form", D, 2, f.poly == closed});
        }
        {
            // b^(2d) - 2b^(2d-1) + 2b^(2d-2) - ... - 2b + 2 at b = a+1
            std::vector<Int> c((std::size_t)D + 1);
            c[(std::size_t)D] = Int(1);
            for (long j = D - 1; j >= 0; --j) c[(std::size_t)j] = (((D - j) % 2) != 0) ? Int(-2) : Int(2);
            IntPoly1 closed = IntPoly1("b", std::move(c)).compose(a_plus_1);
            Factor f = preperiodic_factor(ctx, 2, 2, 2);
            items.push_back({"R_{2,2,2} alternating form", D, 2, f.poly == closed});
        }
    }
    return items;
}

}  // namespace dynirr::uni
