/* Acceptance suite: twelve timed criteria covering the three families, the
   resultant/mod-p lemma grids, the certification pipeline, the F_p survey,
   the numeric oracle and the negative controls.  Prints one pass/fail line
   per criterion; exit status 0 iff every requested criterion passes within
   its time limit. */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "dynirr/cubic_family.hpp"
#include "dynirr/json_io.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/quad_family.hpp"
#include "dynirr/unicritical.hpp"

using namespace dynirr;

namespace {

constexpr long ACCEPT_BUDGET = 8000;   // admits deg P_6 = 7381 at D = 9
constexpr long EXACT_IDENTITY_CAP = 24000;  // top degree for exact-over-Z identity checks
const std::vector<std::uint64_t> CHECK_PRIMES = {2305843009213693951ull /* 2^61-1 */,
                                                 4611686018427387847ull, 4611686018427387817ull};

struct Tally {
    std::mutex mu;
    std::vector<std::string> failures;
    std::atomic<long> checks{0};
    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            std::lock_guard<std::mutex> lock(mu);
            failures.push_back(what);
        }
    }
};

void run_parallel(std::vector<std::function<void()>> tasks, int jobs) {
    if (jobs <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

int hw_jobs() { return std::thread::hardware_concurrency() >= 2 ? 2 : 1; }

std::string tup(std::initializer_list<long> vals) {
    std::string s = "(";
    bool first = true;
    for (long v : vals) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

ModPoly lift_mod(const IntPoly1& f, std::uint64_t q) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i].mod_ui(q);
    return ModPoly(q, std::move(c));
}

long pow3(long e) {
    long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

/* ---- criterion 1: cubic structure, k = 2..6 ---- */
void criterion1(Tally& t) {
    std::vector<std::function<void()>> tasks;
    for (long k = 6; k >= 2; --k)
        tasks.push_back([&t, k]() {
            cubic::Instance inst = cubic::build(k, ACCEPT_BUDGET);
            StructureReport rep = cubic::verify_structure(inst);
            for (const auto& item : rep.items)
                t.require(item.pass, "cubic k=" + std::to_string(k) + ": " + item.name);
            t.require(inst.R.total_degree_or(-1) == 2 * pow3(k - 1) - 1,
                      "cubic k=" + std::to_string(k) + ": deg R");
        });
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 2: cubic Eisenstein, k = 2..6 ---- */
void criterion2(Tally& t) {
    for (long k = 2; k <= 6; ++k) {
        cubic::Slice slice = cubic::build_slice(k, ACCEPT_BUDGET);
        long deg = 2 * pow3(k - 1) - 2;
        t.require(slice.s.is_monic() && slice.s.degree_or(-1) == deg,
                  "cubic k=" + std::to_string(k) + ": s monic of degree 2*3^(k-1)-2");
        t.require(slice.s.coeff(0) == Int(3), "cubic k=" + std::to_string(k) + ": s(0) = 3");
        t.require(reduce_mod(slice.s, 3) == ModPoly::monomial(3, 1, (std::size_t)deg),
                  "cubic k=" + std::to_string(k) + ": s = b^deg mod 3");
        auto cert = cubic::certify_s(slice);
        t.require(cert.verdict == certify::Verdict::irreducible,
                  "cubic k=" + std::to_string(k) + ": Eisenstein certificate at p = 3");
    }
}

/* ---- criterion 3: quadratic rational, k = 3..10 ---- */
void criterion3(Tally& t) {
    std::vector<std::function<void()>> tasks;
    for (long k = 10; k >= 3; --k)
        tasks.push_back([&t, k]() {
            quad::Instance inst = quad::build(k, ACCEPT_BUDGET);
            long deg = (1L << (k - 1)) - 1;
            t.require(inst.R.total_degree_or(-1) == deg,
                      "quad k=" + std::to_string(k) + ": deg R = 2^(k-1)-1");
            t.require(homog_part(inst.R, HomogWhich::lowest) ==
                          -IntPoly2::monomial("a", "b", Int(1), 0, 1),
                      "quad k=" + std::to_string(k) + ": lowest part of R is -b");
            t.require(inst.r.coeff(0) == Int(-2), "quad k=" + std::to_string(k) + ": r(0) = -2");
            t.require(reduce_mod(inst.r, 2) == ModPoly::monomial(2, 1, (std::size_t)deg),
                      "quad k=" + std::to_string(k) + ": r = a^(2^(k-1)-1) mod 2");
            quad::Certificate cert = quad::certify_r(inst);
            t.require(cert.eisenstein.verdict == certify::Verdict::irreducible &&
                          cert.exponent_equals_degree,
                      "quad k=" + std::to_string(k) + ": Eisenstein certificate at p = 2");
            StructureReport rep = quad::verify_structure(inst);
            for (const auto& item : rep.items)
                t.require(item.pass, "quad k=" + std::to_string(k) + ": " + item.name);
        });
    run_parallel(std::move(tasks), hw_jobs());
}

/* factors cache shared by criteria 4 and 7 */
struct FactorCache {
    std::mutex mu;
    std::map<std::tuple<long, long, long, long>, std::shared_ptr<uni::Factor>> map;  // D,k,n,d (d=0 aggregate)
    std::shared_ptr<uni::Factor> get(const uni::Context& ctx, long k, long n, std::optional<long> d) {
        auto key = std::make_tuple(ctx.D(), k, n, d.value_or(0));
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = map.find(key);
            if (it != map.end()) return it->second;
        }
        auto f = std::make_shared<uni::Factor>(d ? uni::preperiodic_factor(ctx, k, n, *d)
                                                 : uni::aggregate_factor(ctx, k, n));
        std::lock_guard<std::mutex> lock(mu);
        return map.emplace(key, std::move(f)).first->second;
    }
};

FactorCache g_factors;
std::map<long, std::shared_ptr<uni::Context>> g_ctx;

uni::Context& ctx_for(long D) {
    auto it = g_ctx.find(D);
    if (it == g_ctx.end())
        it = g_ctx.emplace(D, std::make_shared<uni::Context>(D, ACCEPT_BUDGET)).first;
    return *it->second;
}

/* eq:fkpd / eq:buff with the exact route when the product degree allows it,
   else full-coefficient-vector comparison modulo three verified primes */
void check_factorization(Tally& t, const uni::Context& ctx, long k, long n, std::optional<long> d,
                         const std::string& label) {
    std::map<long, std::shared_ptr<uni::Factor>> keep;
    std::map<long, const uni::Factor*> lookup;
    for (long m : divisors_of(n)) {
        keep[m] = g_factors.get(ctx, k, m, d);
        lookup[m] = keep[m].get();
    }
    long phi = d ? totient(*d) : ctx.D() - 1;
    long prod_degree = phi * ctx.N_long(k + n - 2);
    if (prod_degree <= EXACT_IDENTITY_CAP) {
        t.require(uni::verify_factorization_exact(ctx, k, n, d, lookup), label + " (exact)");
    } else {
        for (std::uint64_t q : CHECK_PRIMES)
            t.require(uni::verify_factorization_mod_q(ctx, k, n, d, lookup, q),
                      label + " (mod " + std::to_string(q) + ")");
    }
}

/* eq:buff in F_q for oversized aggregates: P_{k,n} mod q (power-sum route)
   equals P_gcd^(D-1) * prod_{m|n} R_{k,m} mod q, with R_{k,m} lifted from Z
   when built and reconstructed in F_q otherwise */
void modq_buff_check(Tally& t, const uni::Context& ctx, long k, long n, std::uint64_t q,
                     const std::string& base) {
    ModPoly lhs = ModPoly::constant(q, 1);
    for (long m : divisors_of(n)) {
        long agg_deg = (ctx.D() - 1) * ctx.N_long(k + m - 2);
        ModPoly rm = (agg_deg <= EXACT_IDENTITY_CAP)
                         ? lift_mod(g_factors.get(ctx, k, m, std::nullopt)->poly, q)
                         : uni::factor_image_mod_q(ctx, k, m, std::nullopt, q);
        lhs = lhs * rm;
    }
    lhs = lhs * lift_mod(ctx.P(std::gcd(n, k - 1)), q).pow((unsigned long)(ctx.D() - 1));
    // P_{k,n} mod q as sum_{i+j=D-1} x^i y^j by Horner
    ModPoly x = lift_mod(ctx.P(k + n - 1), q);
    ModPoly y = lift_mod(ctx.P(k - 1), q);
    std::vector<ModPoly> ypows;
    ypows.push_back(ModPoly::constant(q, 1));
    for (long i = 1; i < ctx.D(); ++i) ypows.push_back(ypows.back() * y);
    // sum x^i y^(D-1-i) by Horner in x, from the coefficient of x^(D-1) down
    ModPoly rhs = ypows[0];
    for (long i = 1; i < ctx.D(); ++i) rhs = rhs * x + ypows[(std::size_t)i];
    t.require(lhs == rhs, base + " eq:buff (mod " + std::to_string(q) + ")");
}

/* ---- criterion 4: unicritical identity suite ---- */
void criterion4(Tally& t) {
    std::vector<std::function<void()>> tasks;
    // heaviest tuples first so the two workers overlap
    std::vector<long> Ds = {9, 8, 4, 3, 2};
    for (long D : Ds) {
        tasks.push_back([&t, D]() {
            uni::Context& ctx = ctx_for(D);
            // lem:fk legs on the orbit polynomials
            for (long j = 1; j <= 6; ++j) {
                const IntPoly1& P = ctx.P(j);
                t.require(P.coeff(0) == Int(1), "D=" + std::to_string(D) + " P_" + std::to_string(j) +
                                                    " constant coefficient 1");
                t.require(j == 1 ? P == IntPoly1::constant("a", Int(1))
                                 : (P.is_monic() && P.degree_or(-1) == ctx.N_long(j - 1)),
                          "D=" + std::to_string(D) + " P_" + std::to_string(j) + " monic of degree N");
            }
            // lem:fkfk congruences
            for (long k = 1; k <= 4; ++k)
                t.require(uni::check_orbit_difference(ctx, k),
                          "D=" + std::to_string(D) + " P_{k+1}-P_k = a^{N_k} mod p, k=" +
                              std::to_string(k));
        });
        for (long k = 2; k <= 4; ++k)
            for (long n = 1; n <= 3; ++n) {
                tasks.push_back([&t, D, k, n]() {
                    uni::Context& ctx = ctx_for(D);
                    std::string base = "D=" + std::to_string(D) + " " + tup({k, n});
                    for (long d : divisors_of(D)) {
                        if (d < 2) continue;
                        check_factorization(t, ctx, k, n, d,
                                            base + " d=" + std::to_string(d) + " eq:fkpd");
                    }
                    long agg_degree = (D - 1) * ctx.N_long(k + n - 2);
                    if (agg_degree <= EXACT_IDENTITY_CAP) {
                        check_factorization(t, ctx, k, n, std::nullopt, base + " eq:buff");
                        // P_{k,n} from the power-sum route: monic, constant D
                        IntPoly1 pkn = uni::preperiodic_product(ctx, k, n, std::nullopt);
                        t.require(pkn.is_monic() && pkn.coeff(0) == Int(D) &&
                                      pkn.degree_or(-1) == agg_degree,
                                  base + " lem:fkp shape of P_{k,n}");
                        t.require(uni::verify_power_sum_forms(ctx, k, n),
                                  base + " P_{k,n} summation = quotient");
                        // aggregate factor equals the product of the per-d factors
                        auto agg = g_factors.get(ctx, k, n, std::nullopt);
                        std::vector<std::shared_ptr<uni::Factor>> keep;
                        std::vector<const uni::Factor*> per_d;
                        for (long d : divisors_of(D)) {
                            if (d < 2) continue;
                            keep.push_back(g_factors.get(ctx, k, n, d));
                            per_d.push_back(keep.back().get());
                        }
                        t.require(uni::verify_aggregate_splits(ctx, *agg, per_d),
                                  base + " R_{k,n} = prod_d R_{k,n,d}");
                    } else {
                        // beyond the exact cap: full-vector checks modulo
                        // three verified primes, tied to the Z-built factors
                        for (std::uint64_t q : CHECK_PRIMES) {
                            ModPoly agg = uni::factor_image_mod_q(ctx, k, n, std::nullopt, q);
                            ModPoly prod = ModPoly::constant(q, 1);
                            for (long d : divisors_of(D)) {
                                if (d < 2) continue;
                                prod = prod * lift_mod(g_factors.get(ctx, k, n, d)->poly, q);
                            }
                            t.require(agg == prod, base + " R_{k,n} = prod_d R_{k,n,d} (mod q)");
                            t.require(uni::verify_power_sum_forms_mod_q(ctx, k, n, q),
                                      base + " P_{k,n} summation = quotient (mod q)");
                        }
                        // eq:buff via the mod-q factor images together with
                        // the Z-built divisors for m < n
                        for (std::uint64_t q : CHECK_PRIMES) modq_buff_check(t, ctx, k, n, q, base);
                    }
                });
            }
    }
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 5: resultant suite ---- */
void criterion5(Tally& t) {
    std::vector<std::function<void()>> tasks;
    for (long D : {4L, 3L, 2L})
        tasks.push_back([&t, D]() {
            uni::Context& ctx = ctx_for(D);
            for (long k = 2; k <= 4; ++k)
                for (long m = 1; m <= 3; ++m)
                    for (long n = 1; n <= 3; ++n)
                        for (long d : divisors_of(D)) {
                            if (d < 2) continue;
                            auto w = uni::check_resultant_lemma(ctx, k, m, d, n);
                            t.require(w.matches, "resultant lemma D=" + std::to_string(D) + " " +
                                                     tup({k, m, n, d}) + " got " +
                                                     w.value.to_string());
                        }
        });
    tasks.push_back([&t]() {
        for (long D : {2L, 3L}) {
            uni::Context& ctx = ctx_for(D);
            for (long m = 1; m <= 5; ++m)
                for (long n = 1; n <= 5; ++n) {
                    if (m == n) continue;
                    t.require(resultant(ctx.R(m), ctx.R(n)).abs() == Int(1),
                              "Poonen D=" + std::to_string(D) + " (m,n)=" + tup({m, n}));
                }
        }
    });
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 6: mod-p structure suite ---- */
void criterion6(Tally& t) {
    std::vector<std::function<void()>> tasks;
    for (long D : {9L, 8L, 4L, 3L, 2L})
        for (long k = 2; k <= 4; ++k)
            tasks.push_back([&t, D, k]() {
                uni::Context& ctx = ctx_for(D);
                for (long n = 1; n <= 3; ++n) {
                    auto rep = uni::check_modp_power(ctx, k, n, std::nullopt);
                    t.require(rep.matches, "mod-p aggregate D=" + std::to_string(D) + " " +
                                               tup({k, n}) + " exponent " +
                                               std::to_string(rep.exponent) + " expected " +
                                               std::to_string(rep.expected_exponent.value_or(-1)));
                    for (long d : divisors_of(D)) {
                        if (d < 2) continue;
                        auto rd = uni::check_modp_power(ctx, k, n, d);
                        t.require(rd.matches && rd.is_power,
                                  "mod-p D=" + std::to_string(D) + " " + tup({k, n, d}));
                    }
                }
            });
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 7: theorem pipeline ---- */
void criterion7(Tally& t) {
    struct Job {
        long D, k, n, d;
        double weight;
    };
    std::vector<Job> jobs;
    auto add = [&](long D, long k, long n, long d) {
        double w = (double)uni::factor_degree(ctx_for(D), k, n, d);
        jobs.push_back({D, k, n, d, w});
    };
    for (long D : {2L, 3L, 4L, 8L, 9L})
        for (long k = 2; k <= 5; ++k)
            for (long n : {1L, 2L})
                for (long d : divisors_of(D)) {
                    if (d < 2) continue;
                    add(D, k, n, d);
                }
    for (long D : {2L, 8L})
        for (long k = 2; k <= 4; ++k)
            for (long d : divisors_of(D)) {
                if (d < 2) continue;
                add(D, k, 3, d);
            }
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.weight > b.weight; });
    std::vector<std::function<void()>> tasks;
    for (const Job& j : jobs)
        tasks.push_back([&t, j]() {
            auto cert = certify::theorem_pipeline(ctx_for(j.D), j.k, j.n, j.d);
            t.require(cert.verdict == certify::Verdict::irreducible,
                      "pipeline D=" + std::to_string(j.D) + " " + tup({j.k, j.n, j.d}) + ": " +
                          certify::verdict_name(cert.verdict) + " " + cert.detail);
            t.require(cert.resultant_shape_ok,
                      "pipeline resultant shape D=" + std::to_string(j.D) + " " + tup({j.k, j.n, j.d}));
        });
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 8: appendix survey ---- */
void criterion8(Tally& t) {
    auto rows = uni::fp_survey({2, 3, 4, 8, 9, 16, 27}, 4);
    t.require(rows.size() == 7 * 3, "survey row count");
    for (const auto& r : rows) {
        std::string base = "survey D=" + std::to_string(r.D) + " n=" + std::to_string(r.n);
        t.require(r.matches, base + ": irreducibility matches the classification");
        t.require(r.frobenius_ok, base + ": Frobenius period divisibility");
        if (r.irreducible) t.require(r.degree_divides, base + ": degree screen deg | n*e");
        bool expected = (r.n == 2) || (r.n == 3 && (r.D == 2 || r.D == 8));
        t.require(r.irreducible == expected, base + ": matches the survey table");
    }
}

/* ---- criterion 9: Gleason discriminants ---- */
void criterion9(Tally& t) {
    for (long D : {2L, 3L, 4L}) {
        uni::Context& ctx = ctx_for(D);
        for (long n = 1; n <= 4; ++n) {
            auto rep = uni::check_gleason(ctx, n);
            t.require(rep.ok, "Gleason D=" + std::to_string(D) + " n=" + std::to_string(n) +
                                  " residue " + std::to_string(rep.residue));
        }
    }
    // the derived value disc(P_3) = -23 at D = 2, against resultant(P_3, P_3')
    uni::Context& c2 = ctx_for(2);
    auto rep = uni::check_gleason(c2, 3);
    t.require(rep.disc == Int(-23), "disc(P_3) = -23 at D = 2");
    t.require(resultant(c2.P(3), c2.P(3).derivative()) == Int(23),
              "resultant(P_3, P_3') = 23 at D = 2");
}

/* ---- criterion 10: oracle cross-validation ---- */
void criterion10(Tally& t) {
    std::vector<std::function<void()>> tasks;
    for (long k = 2; k <= 4; ++k)
        tasks.push_back([&t, k]() {
            cubic::Slice slice = cubic::build_slice(k, ACCEPT_BUDGET);
            auto v = oracle::validate_cubic_slice(slice.s, k);
            t.require(v.root_count_ok && v.roots_converged,
                      "oracle cubic k=" + std::to_string(k) + ": roots");
            t.require(v.all_confirmed(), "oracle cubic k=" + std::to_string(k) + ": " +
                                             std::to_string(v.confirmed) + "/" +
                                             std::to_string(v.total));
        });
    for (long k = 2; k <= 5; ++k)
        tasks.push_back([&t, k]() {
            quad::Instance inst = quad::build(k, ACCEPT_BUDGET);
            auto v = oracle::validate_quad_slice(inst.r, k);
            t.require(v.root_count_ok && v.roots_converged,
                      "oracle quad k=" + std::to_string(k) + ": roots");
            t.require(v.all_confirmed(), "oracle quad k=" + std::to_string(k) + ": " +
                                             std::to_string(v.confirmed) + "/" +
                                             std::to_string(v.total));
        });
    for (long k = 2; k <= 4; ++k)
        for (long n = 1; n <= 2; ++n)
            tasks.push_back([&t, k, n]() {
                uni::Context& ctx = ctx_for(2);
                auto f = g_factors.get(ctx, k, n, 2L);
                auto v = oracle::validate_unicritical(f->poly, 2, k, n, 2);
                t.require(v.root_count_ok && v.roots_converged,
                          "oracle uni " + tup({k, n}) + ": roots");
                t.require(v.all_confirmed(),
                          "oracle uni " + tup({k, n}) + ": " + std::to_string(v.confirmed) + "/" +
                              std::to_string(v.total) + " omega_ok=" + std::to_string(v.omega_ok));
            });
    run_parallel(std::move(tasks), hw_jobs());
}

/* ---- criterion 11: closed forms ---- */
void criterion11(Tally& t) {
    for (long D : {2L, 4L, 6L, 8L}) {
        uni::Context ctx(D, ACCEPT_BUDGET);
        for (const auto& item : uni::special_cases_check(ctx))
            t.require(item.pass, "closed form D=" + std::to_string(D) + ": " + item.name);
    }
}

/* ---- criterion 12: negative controls ---- */
void criterion12(Tally& t) {
    // perturbed s_2: constant 4 is no longer divisible by 3
    cubic::Slice slice = cubic::build_slice(2);
    auto bad_s = certify::eisenstein_classic(slice.s + IntPoly1::constant("b", Int(1)), 3);
    t.require(bad_s.verdict == certify::Verdict::inconclusive && !bad_s.nonleading_div_p &&
                  bad_s.lead_not_div_p && bad_s.const_not_div_p2,
              "perturbed s_2 fails exactly the divisibility hypothesis");

    // perturbed r_3: constant -4 fails only the p^2 hypothesis
    quad::Instance q3 = quad::build(3);
    IntPoly1 bad_r = -(q3.r - IntPoly1::constant("a", Int(2)));
    auto cert_r = certify::eisenstein_classic(bad_r, 2);
    t.require(cert_r.verdict == certify::Verdict::inconclusive && !cert_r.const_not_div_p2 &&
                  cert_r.nonleading_div_p && cert_r.lead_not_div_p,
              "perturbed r_3 fails exactly the p^2-on-constant hypothesis");

    // the generalized criterion refuses A = B^2 through the zero resultant
    auto refuse = certify::eisenstein_general(IntPoly1("a", {Int(1), Int(2), Int(1)}),
                                              IntPoly1("a", {Int(1), Int(1)}), 2);
    t.require(refuse.verdict == certify::Verdict::inconclusive && refuse.resultant_value->is_zero() &&
                  !refuse.resultant_bound_ok && refuse.power_structure_ok &&
                  refuse.base_irreducible_mod_p,
              "A = B^2 is refused with resultant 0");

    // corrupted instances trip the structure reports
    cubic::Instance ci = cubic::build(2);
    ci.R = ci.R + IntPoly2::monomial("a", "b", Int(1), 1, 1);
    t.require(!cubic::verify_structure(ci).all_pass(), "corrupted cubic instance fails");
    quad::Instance qi = quad::build(3);
    qi.R = qi.R + IntPoly2::monomial("a", "b", Int(3), 0, 2);
    t.require(!quad::verify_structure(qi).all_pass(), "corrupted quad instance fails");

    // a genuinely reducible mod-p base is reported out-of-hypotheses
    auto out = certify::theorem_pipeline(3, 2, 3, 3, ACCEPT_BUDGET);
    t.require(out.verdict == certify::Verdict::out_of_hypotheses,
              "D=3 n=3 pipeline reports out-of-hypotheses");
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    void (*run)(Tally&);
};

const Criterion CRITERIA[] = {
    {1, "cubic structure suite (k = 2..6)", 60.0, criterion1},
    {2, "cubic Eisenstein suite (k = 2..6)", 10.0, criterion2},
    {3, "quadratic-rational suite (k = 3..10)", 30.0, criterion3},
    {4, "unicritical identity suite", 120.0, criterion4},
    {5, "resultant suite", 120.0, criterion5},
    {6, "mod-p structure suite", 60.0, criterion6},
    {7, "theorem pipeline", 180.0, criterion7},
    {8, "appendix survey", 30.0, criterion8},
    {9, "Gleason discriminants", 10.0, criterion9},
    {10, "oracle cross-validation", 120.0, criterion10},
    {11, "closed forms", 10.0, criterion11},
    {12, "negative controls", 5.0, criterion12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    for (long D : {2L, 3L, 4L, 8L, 9L}) ctx_for(D);  // the task pools share these
    bool all_pass = true;
    for (const Criterion& c : CRITERIA) {
        if (only != 0 && c.id != only) continue;
        Tally tally;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(tally);
        } catch (const std::exception& e) {
            tally.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = tally.failures.empty();
        bool in_time = secs < c.limit;
        bool pass = ok && in_time;
        all_pass = all_pass && pass;
        std::printf("%s criterion %2d: %s  [%ld checks, %.1fs %s %.0fs]\n", pass ? "PASS" : "FAIL",
                    c.id, c.name, tally.checks.load(), secs, in_time ? "<" : ">=", c.limit);
        for (std::size_t i = 0; i < tally.failures.size() && i < 12; ++i)
            std::printf("      failed: %s\n", tally.failures[i].c_str());
        if (tally.failures.size() > 12)
            std::printf("      ... and %zu more\n", tally.failures.size() - 12);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
