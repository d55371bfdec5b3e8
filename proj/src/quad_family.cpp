#include "dynirr/quad_family.hpp"

#include "dynirr/modpoly.hpp"
#include "dynirr/unicritical.hpp"

namespace dynirr::quad {

long default_budget() { return uni::default_budget(); }

namespace {

long pow2l(long e) { return (long)1 << e; }

IntPoly2 var_a() { return IntPoly2::monomial("a", "b", Int(1), 1, 0); }
IntPoly2 var_b() { return IntPoly2::monomial("a", "b", Int(1), 0, 1); }

}  // namespace

Instance build(long k, long budget) {
    if (k < 2) throw value_error("quadratic rational family needs k >= 2");
    if (k > 60 || pow2l(k - 1) - 1 > budget)
        throw budget_error("quadratic rational instance exceeds budget");
    Instance inst;
    inst.k = k;
    IntPoly2 a = var_a(), b = var_b();
    IntPoly2 b_minus_2 = b - IntPoly2::constant("a", "b", Int(2));
    inst.P_seq.assign(2, IntPoly2("a", "b"));
    inst.Q_seq.assign(2, IntPoly2("a", "b"));
    inst.P_seq.push_back(a);
    inst.Q_seq.push_back(IntPoly2::constant("a", "b", Int(1)));
    for (long j = 2; j < k; ++j) {
        // evaluate both updates before either push (push_back reallocation
        // would invalidate references into the sequences)
        const IntPoly2& P = inst.P_seq.back();
        const IntPoly2& Q = inst.Q_seq.back();
        IntPoly2 nextP = a * (P * (b * Q - P));
        IntPoly2 nextQ = Q * (Q + b_minus_2 * P);
        inst.P_seq.push_back(std::move(nextP));
        inst.Q_seq.push_back(std::move(nextQ));
    }
    inst.R = inst.P_seq.back() - b * inst.Q_seq.back();
    inst.r = substitute(inst.R, "b", Int(2));
    return inst;
}

StructureReport verify_structure(const Instance& inst) {
    StructureReport rep;
    long k = inst.k;
    if (k < 3) throw value_error("structure checks need k >= 3");
    IntPoly2 b = var_b();

    rep.add("R = P_k - b Q_k", inst.R == inst.P_seq.back() - b * inst.Q_seq.back());
    rep.add("r = R(a, 2)", inst.r == substitute(inst.R, "b", Int(2)));

    rep.add("lowest part of R = -b", homog_part(inst.R, HomogWhich::lowest) == -b);

    // Lowest parts: Q_j starts at 1; P_j at a for j = 2 and, by the induction
    // L(P_{j+1}) = a b L(P_j) from L(P_3) = a^2 (b - a), at
    // a^(j-1) b^(j-3) (b - a) for j >= 3 (total degree 2j - 3, far above 1,
    // which is all the R_k conclusion needs).
    bool low_ok = true;
    for (long j = 2; j <= k; ++j) {
        const IntPoly2& P = inst.P_seq[(std::size_t)j];
        const IntPoly2& Q = inst.Q_seq[(std::size_t)j];
        IntPoly2 expect =
            (j == 2) ? var_a()
                     : IntPoly2::monomial("a", "b", Int(1), (unsigned)(j - 1), (unsigned)(j - 3)) *
                           (var_b() - var_a());
        low_ok = low_ok && homog_part(P, HomogWhich::lowest) == expect;
        low_ok = low_ok && homog_part(Q, HomogWhich::lowest) == IntPoly2::constant("a", "b", Int(1));
    }
    rep.add("lowest part of P_j = a^(j-1) b^(j-3) (b-a), of Q_j = 1", low_ok);

    rep.add("deg R = 2^(k-1) - 1", inst.R.total_degree_or(-1) == pow2l(k - 1) - 1);

    bool degP_ok = true, degQ_ok = true;
    for (long j = 2; j <= k; ++j) {
        degP_ok = degP_ok && inst.P_seq[(std::size_t)j].total_degree_or(-1) <= pow2l(j - 1) - 1;
        degQ_ok = degQ_ok && inst.Q_seq[(std::size_t)j].total_degree_or(-1) <= pow2l(j - 1) - 2;
    }
    rep.add("deg P_j <= 2^(j-1) - 1", degP_ok);
    rep.add("deg Q_j <= 2^(j-1) - 2", degQ_ok);

    // slice b = 2: q_j = 1 and -p_j monic of degree 2^(j-1)-1 with p_j(0) = 0
    bool slice_ok = true;
    for (long j = 3; j <= k; ++j) {
        IntPoly1 pj = substitute(inst.P_seq[(std::size_t)j], "b", Int(2));
        IntPoly1 qj = substitute(inst.Q_seq[(std::size_t)j], "b", Int(2));
        slice_ok = slice_ok && qj == IntPoly1::constant("a", Int(1));
        slice_ok = slice_ok && (-pj).is_monic() && pj.degree_or(-1) == pow2l(j - 1) - 1 &&
                   pj.coeff(0).is_zero();
    }
    rep.add("on b=2: q_j = 1 and -p_j monic with zero constant term", slice_ok);

    rep.add("deg r = 2^(k-1) - 1", inst.r.degree_or(-1) == pow2l(k - 1) - 1);
    rep.add("r(0) = -2", inst.r.coeff(0) == Int(-2));
    return rep;
}

Certificate certify_r(const Instance& inst) {
    Certificate out;
    const IntPoly1& r = inst.r;
    long deg = r.degree_or(-1);
    IntPoly1 monic = r.is_monic() ? r : -r;
    if (!monic.is_monic()) throw value_error("r_k is not +-monic");
    out.eisenstein = certify::eisenstein_classic(monic, 2);
    ModPoly rbar = reduce_mod(r, 2);
    auto pow = as_power_of(rbar, ModPoly::variable(2));
    if (pow) out.mod2_exponent = pow->exponent;
    out.exponent_equals_degree = (out.mod2_exponent == deg);
    out.note = "mod-2 image is a^" + std::to_string(out.mod2_exponent) + "; the exponent equals deg r_k = 2^(k-1)-1 (an exponent of 2^(k-1) would exceed the degree)";
    if (!out.exponent_equals_degree) {
        out.eisenstein.failed.push_back("r_k mod 2 is a pure power of a of exponent deg(r_k)");
        out.eisenstein.verdict = certify::Verdict::inconclusive;
    }
    return out;
}

Rat evaluate_rat(const IntPoly2& f, const Rat& a, const Rat& b) {
    Rat r(0);
    // graded scan with memoized powers
    std::vector<Rat> apow{Rat(1)}, bpow{Rat(1)};
    for (const auto& [e, c] : f.terms()) {
        while (apow.size() <= e.i) apow.push_back(apow.back() * a);
        while (bpow.size() <= e.j) bpow.push_back(bpow.back() * b);
        r = r + Rat(c, Int(1)) * apow[e.i] * bpow[e.j];
    }
    return r;
}

bool check_rational_point(const Instance& inst, const Rat& a, const Rat& b) {
    Rat z = a;
    Rat one(1), two(2);
    for (long step = 0; step < inst.k - 2; ++step) {
        Rat den = one + (b - two) * z;
        if (den.is_zero()) throw value_error("orbit hit a pole of G_{a,b}");
        z = a * z * (b - z) / den;
    }
    Rat qk = evaluate_rat(inst.Q_seq.back(), a, b);
    if (qk.is_zero()) throw value_error("Q_k vanishes at the sample point");
    Rat expect = evaluate_rat(inst.P_seq.back(), a, b) / qk;
    return z == expect;
}

}  // namespace dynirr::quad
