#include <doctest.h>

#include "dynirr/modpoly.hpp"
#include "dynirr/quad_family.hpp"

using namespace dynirr;

TEST_SUITE_BEGIN("quad");

namespace {

IntPoly1 apoly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.push_back(Int(v));
    return IntPoly1("a", std::move(c));
}

}  // namespace

TEST_CASE("k = 2: R = a - b") {
    quad::Instance inst = quad::build(2);
    IntPoly2 expect = IntPoly2::monomial("a", "b", Int(1), 1, 0) -
                      IntPoly2::monomial("a", "b", Int(1), 0, 1);
    CHECK(inst.R == expect);
    CHECK(inst.r == apoly({-2, 1}));  // a - 2
}

TEST_CASE("k = 3: r_3 = -a^3 + 2a^2 - 2") {
    // oracle: the slice recursion p_2 = a, p_{j+1} = -a p_j^2 + 2 a p_j
    // gives p_3 = -a^3 + 2a^2 and r_3 = p_3 - 2
    quad::Instance inst = quad::build(3);
    CHECK(inst.r == apoly({-2, 0, 2, -1}));
    IntPoly1 a = IntPoly1::variable("a");
    IntPoly1 p = a;
    p = Int(-1) * (a * p * p) + Int(2) * (a * p);
    CHECK(inst.r == p - IntPoly1::constant("a", Int(2)));
}

TEST_CASE("degree lemma: deg R_k = 2^(k-1) - 1") {
    for (long k = 3; k <= 6; ++k) {
        quad::Instance inst = quad::build(k);
        CHECK(inst.R.total_degree_or(-1) == (1L << (k - 1)) - 1);
        CHECK(inst.r.degree_or(-1) == (1L << (k - 1)) - 1);
    }
}

TEST_CASE("structure report passes for k = 3..6") {
    for (long k = 3; k <= 6; ++k) {
        quad::Instance inst = quad::build(k);
        StructureReport rep = quad::verify_structure(inst);
        INFO("k = ", k);
        for (const auto& item : rep.items) {
            INFO(item.name);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("corrupted instance fails a check") {
    quad::Instance inst = quad::build(4);
    inst.R = inst.R + IntPoly2::monomial("a", "b", Int(3), 0, 2);
    CHECK(!quad::verify_structure(inst).all_pass());
}

TEST_CASE("substituting b = 2 into R_2 gives a - 2") {
    quad::Instance inst = quad::build(2);
    CHECK(substitute(inst.R, "b", Int(2)) == apoly({-2, 1}));
}

TEST_CASE("certificates for k = 2..8") {
    for (long k = 2; k <= 8; ++k) {
        quad::Instance inst = quad::build(k);
        quad::Certificate cert = quad::certify_r(inst);
        INFO("k = ", k);
        CHECK(cert.eisenstein.verdict == certify::Verdict::irreducible);
        CHECK(cert.mod2_exponent == (1L << (k - 1)) - 1);
        CHECK(cert.exponent_equals_degree);
    }
}

TEST_CASE("r_k mod 2 = a^(2^(k-1)-1) for k = 3..8") {
    for (long k = 3; k <= 8; ++k) {
        quad::Instance inst = quad::build(k);
        ModPoly rbar = reduce_mod(inst.r, 2);
        CHECK(rbar == ModPoly::monomial(2, 1, (std::size_t)((1L << (k - 1)) - 1)));
    }
}

TEST_CASE("perturbed constant term fails the p^2 hypothesis") {
    quad::Instance inst = quad::build(3);
    // r_3 with constant -4 instead of -2
    IntPoly1 bad = inst.r - IntPoly1::constant("a", Int(2));
    auto cert = certify::eisenstein_classic(-bad, 2);
    CHECK(cert.verdict == certify::Verdict::inconclusive);
    CHECK(!cert.const_not_div_p2);
    CHECK(cert.nonleading_div_p);
}

TEST_CASE("exact rational iteration matches P_k/Q_k") {
    for (long k = 3; k <= 7; ++k) {
        quad::Instance inst = quad::build(k);
        INFO("k = ", k);
        CHECK(quad::check_rational_point(inst, Rat(3, 2), Rat(5, 3)));
        CHECK(quad::check_rational_point(inst, Rat(-7, 5), Rat(1, 4)));
        CHECK(quad::check_rational_point(inst, Rat(2, 1), Rat(3, 1)));
    }
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(quad::build(30, 5000), budget_error);
}

TEST_SUITE_END();
