#include "dynirr/cubic_family.hpp"

#include <cstdlib>

#include "dynirr/modpoly.hpp"
#include "dynirr/unicritical.hpp"

namespace dynirr::cubic {

long default_budget() { return uni::default_budget(); }

namespace {

long pow3(long e) {
    long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

IntPoly2 var_a() { return IntPoly2::monomial("a", "b", Int(1), 1, 0); }
IntPoly2 var_b() { return IntPoly2::monomial("a", "b", Int(1), 0, 1); }

}  // namespace

Instance build(long k, long budget) {
    if (k < 2) throw value_error("cubic family needs preperiod k >= 2");
    long degQ = 2 * pow3(k - 1);
    if (degQ > budget)
        throw budget_error("cubic instance degree " + std::to_string(degQ) + " exceeds budget " +
                           std::to_string(budget));
    Instance inst;
    inst.k = k;
    IntPoly2 a = var_a(), b = var_b();
    IntPoly2 a2 = a * a;
    IntPoly2 drift = Int(2) * (a2 * a) + b;  // 2a^3 + b
    inst.P_seq.push_back(a);
    inst.P_seq.push_back(b);
    for (long j = 1; j < k; ++j) {
        const IntPoly2& p = inst.P_seq.back();
        IntPoly2 p2 = p * p;
        inst.P_seq.push_back(p2 * p - Int(3) * (a2 * p) + drift);
    }
    const IntPoly2& pk1 = inst.P_seq[(std::size_t)k - 1];
    const IntPoly2& pk = inst.P_seq[(std::size_t)k];
    inst.Q = pk1 * pk1 + pk1 * pk + pk * pk - Int(3) * a2;
    inst.R = exact_div(inst.Q, b - a);
    inst.r = substitute(inst.R, "a", Int(0));
    inst.s = exact_div(inst.r, IntPoly1::variable("b"));
    return inst;
}

Slice build_slice(long k, long budget) {
    if (k < 2) throw value_error("cubic slice needs k >= 2");
    if (2 * pow3(k - 1) > budget) throw budget_error("cubic slice exceeds budget");
    Slice s;
    s.k = k;
    IntPoly1 b = IntPoly1::variable("b");
    s.p_seq.push_back(IntPoly1("b"));  // unused slot 0
    s.p_seq.push_back(b);
    for (long j = 1; j < k; ++j) s.p_seq.push_back(s.p_seq.back().pow(3) + b);
    const IntPoly1& p1 = s.p_seq[(std::size_t)k - 1];
    const IntPoly1& p2 = s.p_seq[(std::size_t)k];
    s.q = p1 * p1 + p1 * p2 + p2 * p2;
    s.r = exact_div(s.q, b);
    s.s = exact_div(s.r, b);
    return s;
}

StructureReport verify_structure(const Instance& inst) {
    StructureReport rep;
    long k = inst.k;
    IntPoly2 a = var_a(), b = var_b();

    // degrees
    bool degs_ok = true;
    for (long j = 1; j <= k; ++j)
        degs_ok = degs_ok && inst.P_seq[(std::size_t)j].total_degree_or(-1) == pow3(j - 1);
    rep.add("deg P_j = 3^(j-1)", degs_ok);
    rep.add("deg Q = 2*3^(k-1)", inst.Q.total_degree_or(-1) == 2 * pow3(k - 1));
    rep.add("deg R = 2*3^(k-1) - 1", inst.R.total_degree_or(-1) == 2 * pow3(k - 1) - 1);

    rep.add("Q = (b-a) R", (b - a) * inst.R == inst.Q);

    // lowest homogeneous part of P_j is b, for j = 1..k
    bool low_pj = true;
    for (long j = 1; j <= k; ++j)
        low_pj = low_pj && homog_part(inst.P_seq[(std::size_t)j], HomogWhich::lowest) == b;
    rep.add("lowest part of P_j = b", low_pj);

    rep.add("lowest part of R = 3(a+b)",
            homog_part(inst.R, HomogWhich::lowest) == Int(3) * (a + b));

    {
        long e1 = 4 * pow3(k - 2) - 1, e2 = 2 * pow3(k - 2);
        IntPoly2 expect = (b - a).pow((unsigned long)e1) * (Int(2) * a + b).pow((unsigned long)e2);
        rep.add("highest part of R = (b-a)^(4*3^(k-2)-1) (2a+b)^(2*3^(k-2))",
                homog_part(inst.R, HomogWhich::highest) == expect);
    }

    rep.add("R(a,a) = 6a",
            substitute(inst.R, "b", IntPoly1::variable("a")) ==
                IntPoly1::monomial("a", Int(6), 1));

    // P_j(a,a) = a on the diagonal
    bool diag_ok = true;
    for (long j = 0; j <= k; ++j)
        diag_ok = diag_ok &&
                  substitute(inst.P_seq[(std::size_t)j], "b", IntPoly1::variable("a")) ==
                      IntPoly1::variable("a");
    rep.add("P_j(a,a) = a", diag_ok);

    // slice tie-in: R(0,b)*b equals q_k from the univariate recursion,
    // and q_k = p_{k-1}^2 + p_{k-1} p_k + p_k^2
    Slice sl = build_slice(k);
    rep.add("R(0,b)*b = q_k (slice)", inst.r * IntPoly1::variable("b") == sl.q);
    rep.add("r and s match the slice", inst.r == sl.r && inst.s == sl.s);

    // mod-3 orbit congruence: p_j = b^(3^(j-1)) + ... + b^3 + b
    bool mod3_ok = true;
    for (long j = 1; j <= k; ++j) {
        ModPoly lhs = reduce_mod(sl.p_seq[(std::size_t)j], 3);
        std::vector<std::uint64_t> c((std::size_t)pow3(j - 1) + 1, 0);
        for (long i = 0; i < j; ++i) c[(std::size_t)pow3(i)] = 1;
        mod3_ok = mod3_ok && lhs == ModPoly(3, std::move(c));
    }
    rep.add("p_j = b^(3^(j-1)) + ... + b mod 3", mod3_ok);

    // s_k facts used by the Eisenstein certificate
    rep.add("s monic of degree 2*3^(k-1) - 2",
            inst.s.is_monic() && inst.s.degree_or(-1) == 2 * pow3(k - 1) - 2);
    rep.add("s(0) = 3", inst.s.coeff(0) == Int(3));
    return rep;
}

certify::EisensteinCertificate certify_s(const Instance& inst) {
    return certify::eisenstein_classic(inst.s, 3);
}

certify::EisensteinCertificate certify_s(const Slice& slice) {
    return certify::eisenstein_classic(slice.s, 3);
}

}  // namespace dynirr::cubic
