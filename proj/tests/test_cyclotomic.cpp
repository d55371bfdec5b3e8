#include <doctest.h>

#include "dynirr/cyclotomic.hpp"

using namespace dynirr;

TEST_SUITE_BEGIN("cyclotomic");

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly1("x", {Int(-1), Int(1)}));
    CHECK(cyclotomic_poly(2) == IntPoly1("x", {Int(1), Int(1)}));
    CHECK(cyclotomic_poly(3) == IntPoly1("x", {Int(1), Int(1), Int(1)}));
    CHECK(cyclotomic_poly(4) == IntPoly1("x", {Int(1), Int(0), Int(1)}));
    CHECK(cyclotomic_poly(6) == IntPoly1("x", {Int(1), Int(-1), Int(1)}));
    CHECK(cyclotomic_poly(9) == IntPoly1("x", {Int(1), Int(0), Int(0), Int(1), Int(0), Int(0), Int(1)}));
    CHECK(cyclotomic_poly(12).degree_or(-1) == totient(12));
    // product over divisors reassembles x^d - 1
    for (long d : {6L, 8L, 12L, 30L}) {
        IntPoly1 prod = IntPoly1::constant("x", Int(1));
        for (long e : divisors_of(d)) prod = prod * cyclotomic_poly(e);
        std::vector<Int> c((std::size_t)d + 1);
        c[0] = Int(-1);
        c[(std::size_t)d] = Int(1);
        CHECK(prod == IntPoly1("x", std::move(c)));
    }
}

TEST_CASE("homogenized forms") {
    // Phi_2(X, Y) = X + Y, Phi_4 = X^2 + Y^2
    CHECK(cyclotomic_homogeneous(2) ==
          IntPoly2::monomial("X", "Y", Int(1), 1, 0) + IntPoly2::monomial("X", "Y", Int(1), 0, 1));
    CHECK(cyclotomic_homogeneous(4) ==
          IntPoly2::monomial("X", "Y", Int(1), 2, 0) + IntPoly2::monomial("X", "Y", Int(1), 0, 2));
    // value at (1, 1): p on prime powers, 1 otherwise
    CHECK(BinaryForm::cyclotomic(4).at_one_one() == Int(2));
    CHECK(BinaryForm::cyclotomic(6).at_one_one() == Int(1));
    CHECK(BinaryForm::cyclotomic(9).at_one_one() == Int(3));
    CHECK(BinaryForm::cyclotomic(8).at_one_one() == Int(2));
    CHECK(BinaryForm::cyclotomic(12).at_one_one() == Int(1));
}

TEST_CASE("form evaluation over integers and polynomials") {
    BinaryForm phi4 = BinaryForm::cyclotomic(4);
    CHECK(phi4.eval(Int(3), Int(2)) == Int(13));
    IntPoly1 x = IntPoly1::variable("a");
    IntPoly1 one = IntPoly1::constant("a", Int(1));
    // Phi_4(a, 1) = a^2 + 1
    CHECK(phi4.eval(x, one) == IntPoly1("a", {Int(1), Int(0), Int(1)}));
    // power sum: sum_{i+j=D-1} X^i Y^j at (X, Y) = (a, 1) for D = 3 is a^2 + a + 1
    CHECK(BinaryForm::power_sum(3).eval(x, one) == IntPoly1("a", {Int(1), Int(1), Int(1)}));
    CHECK(BinaryForm::power_sum(4).at_one_one() == Int(4));
}

TEST_SUITE_END();
