#ifndef DYNIRR_UNICRITICAL_HPP
#define DYNIRR_UNICRITICAL_HPP

/* The unicritical family f_a(z) = a z^D + 1: critical-orbit polynomials P_n,
   Gleason factors R_n, preperiodic factors R_{k,n,d} (and their d-aggregated
   versions), with the resultant, mod-p and discriminant checks that feed the
   irreducibility certification pipeline.

   Everything is exact.  Small instances run on explicit polynomials; large
   ones evaluate the defining formulas at t = 2^M for a rigorous coefficient
   bound M (every root of a preperiodic factor satisfies |a| <= 2, hence
   |coefficient| <= 3^degree) and decode the packed result. */

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "dynirr/cyclotomic.hpp"
#include "dynirr/int.hpp"
#include "dynirr/modpoly.hpp"
#include "dynirr/poly1.hpp"

namespace dynirr::uni {

long default_budget();  // DYNIRR_BUDGET environment override, else 5000

class Context {
  public:
    explicit Context(long D, long budget = default_budget());

    long D() const { return D_; }
    long budget() const { return budget_; }
    bool is_prime_power() const { return p_ != 0; }
    long p() const {
        require_prime_power();
        return p_;
    }
    long e() const {
        require_prime_power();
        return e_;
    }

    /* N_k = (D^k - 1)/(D - 1) */
    Int N(long k) const;
    long N_long(long k) const;

    /* critical-orbit polynomial: P_1 = 1, P_{j+1} = a*P_j^D + 1 */
    const IntPoly1& P(long n) const;
    /* Gleason factor R_n = prod_{m|n} P_m^{mu(n/m)}; R_1 = 1 */
    const IntPoly1& R(long n) const;

    /* deg P_{j} = N_{j-1} must stay within the budget */
    void check_budget(long orbit_index) const;

    void require_prime_power() const {
        if (p_ == 0) throw value_error("operation requires a prime power degree D");
    }

  private:
    long D_;
    long p_ = 0, e_ = 0;
    long budget_;
    // lazy caches; map nodes are stable, so returned references survive
    // later insertions, and the recursive mutex makes them shareable
    // across threads
    mutable std::recursive_mutex cache_mu_;
    mutable std::map<long, IntPoly1> P_;
    mutable std::map<long, IntPoly1> R_;
};

struct Factor {
    long k = 0;
    long n = 0;
    std::optional<long> d;  // empty = aggregate over all divisors d >= 2
    IntPoly1 poly;          // R_{k,n,d} (or R_{k,n})
    long phi = 0;           // deg of the attached form: phi(d), or D-1 for the aggregate
};

/* predicted degree of R_{k,n,d} (or of R_{k,n} when d is empty) */
long factor_degree(const Context& ctx, long k, long n, std::optional<long> d);

/* R_{k,n,d} = prod_{m|n} (P_{k,m,d} / P_{gcd(m,k-1)}^{phi(d)})^{mu(n/m)}
   with P_{k,m,d} = Phi_d(P_{k+m-1}, P_{k-1}); Mobius inversion of the
   multiplicity factorization of P_{k,n,d}. */
Factor preperiodic_factor(const Context& ctx, long k, long n, long d);

/* d-aggregated P_{k,n} and R_{k,n}; same shape with Phi_d replaced by the
   full form sum_{i+j=D-1} X^i Y^j */
Factor aggregate_factor(const Context& ctx, long k, long n);

/* P_{k,n,d} itself (P_{k,n} when d is empty) as an explicit polynomial */
IntPoly1 preperiodic_product(const Context& ctx, long k, long n, std::optional<long> d);

/* the form attached to d (cyclotomic) or to the aggregate (power sum) */
BinaryForm form_for(const Context& ctx, std::optional<long> d);

/* ---- identity verification -------------------------------------------- */

/* P_gcd^phi * prod_{m|n} R_{k,m,d} == Phi_d(P_{k+n-1}, P_{k-1}), given the
   already-built factors for all m | n.  `exact` verifies the identity over Z
   (explicit polynomials below the degree cap, values at t = 2^M above it,
   which is equivalent by the coefficient bound); the `mod_q` variant checks
   the full coefficient vectors modulo a verified 61-bit prime. */
using FactorLookup = const std::map<long, const Factor*>&;
bool verify_factorization_exact(const Context& ctx, long k, long n, std::optional<long> d,
                                FactorLookup factors_by_m);
bool verify_factorization_mod_q(const Context& ctx, long k, long n, std::optional<long> d,
                                FactorLookup factors_by_m, std::uint64_t q);

/* P_{k,n} from the power-sum formula equals the quotient
   (P_{k+n-1}^D - P_{k-1}^D) / (P_{k+n-1} - P_{k-1}) */
bool verify_power_sum_forms(const Context& ctx, long k, long n);
bool verify_power_sum_forms_mod_q(const Context& ctx, long k, long n, std::uint64_t q);

/* R_{k,n} == prod over d|D, d >= 2 of R_{k,n,d} */
bool verify_aggregate_splits(const Context& ctx, const Factor& aggregate,
                             const std::vector<const Factor*>& per_d);

/* ---- structural checks ------------------------------------------------ */

struct ResultantWitness {
    long k, m, d, n;
    Int value;               // resultant(R_{k,m,d}, R_n), exact with sign
    Int expected_abs;        // p^(deg R_n) in the prime-power diagonal case, else 1
    bool diagonal_case;      // n == m and d a prime power
    bool matches;            // |value| == expected_abs
};
ResultantWitness check_resultant_lemma(const Context& ctx, long k, long m, long d, long n);

/* direct mod-p images (D = p^e): P_n = sum_{i<n} a^{N_i},
   Phi_d(X,Y) = (X-Y)^phi(d), divisions exact since everything is monic */
ModPoly orbit_mod_p(const Context& ctx, long n);
ModPoly gleason_mod_p(const Context& ctx, long n);
ModPoly factor_mod_p(const Context& ctx, long k, long n, std::optional<long> d);

/* the same factor constructed entirely in F_q for an arbitrary prime q
   (plain recursion, no sparsity shortcut); independent of the Z route */
ModPoly factor_image_mod_q(const Context& ctx, long k, long n, std::optional<long> d,
                           std::uint64_t q);

struct ModpPowerReport {
    long k, n;
    std::optional<long> d;
    bool is_power = false;
    long exponent = -1;
    std::uint64_t scalar = 0;
    std::optional<long> expected_exponent;  // pinned for the aggregate only
    bool matches = false;
};
ModpPowerReport check_modp_power(const Context& ctx, long k, long n, std::optional<long> d);

/* M_{k,1} = (D-1) N_{k-1}; for n >= 2, (D-1)(D^{k-1}-1) when n | k-1 and
   (D-1) D^{k-1} otherwise */
long expected_modp_exponent(const Context& ctx, long k, long n);

/* P_{k+1} - P_k == a^{N_k} mod p */
bool check_orbit_difference(const Context& ctx, long k);

struct GleasonReport {
    long n;
    Int disc;      // discriminant of P_n
    long residue;  // disc mod D, in 0..D-1
    bool ok;       // residue == 1
};
GleasonReport check_gleason(const Context& ctx, long n);

struct SurveyRow {
    long D, n, p, e;
    long deg_rn;
    bool degree_divides;  // deg(R_n) | n*e
    bool frobenius_ok;    // a^(D^n) == a mod R_n
    bool irreducible;
    bool expected_irreducible;  // n == 2, or n == 3 with D in {2, 8}
    bool matches;
};
std::vector<SurveyRow> fp_survey(const std::vector<long>& Ds, long n_max);

struct SpecialCaseItem {
    std::string name;
    long D, d;
    bool pass;
};
/* closed forms: R_{2,1,d} = Phi_d(a+1, 1) for every d | D; and for even D,
   R_{3,1,2} and R_{2,2,2} against their quadrinomial / alternating forms
   under b = a + 1 */
std::vector<SpecialCaseItem> special_cases_check(const Context& ctx);

}  // namespace dynirr::uni

#endif
