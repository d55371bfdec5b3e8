#ifndef DYNIRR_CYCLOTOMIC_HPP
#define DYNIRR_CYCLOTOMIC_HPP

/* Homogenized cyclotomic polynomials Phi_d(X, Y) with integer coefficients,
   built from the univariate cyclotomics by the recursive exact division
   (x^d - 1) / prod_{e|d, e<d} Phi_e.  No complex arithmetic anywhere. */

#include <vector>

#include "dynirr/int.hpp"
#include "dynirr/poly1.hpp"
#include "dynirr/poly2.hpp"

namespace dynirr {

/* univariate cyclotomic polynomial of index d, in the given variable */
IntPoly1 cyclotomic_poly(long d, const std::string& var = "x");

/* A homogeneous binary form sum_i c_i X^i Y^(n-i), evaluated over any ring
   with multiplication and addition.  Covers Phi_d(X, Y) and the full form
   sum_{i+j=D-1} X^i Y^j used for the aggregated preperiodic factors. */
class BinaryForm {
  public:
    /* Phi_d(X, Y); degree phi(d), c_i = coefficients of the univariate cyclotomic */
    static BinaryForm cyclotomic(long d);
    /* sum over i+j = D-1 of X^i Y^j, all coefficients 1 */
    static BinaryForm power_sum(long D);

    long degree() const { return (long)c_.size() - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    long index() const { return index_; }  // d for cyclotomic, -D for power sums

    Int eval(const Int& x, const Int& y) const;
    IntPoly1 eval(const IntPoly1& x, const IntPoly1& y) const;

    /* value at X = Y = 1 (for Phi_d: p when d = p^e, else 1) */
    Int at_one_one() const;

    /* the form as an explicit bivariate polynomial in (X, Y) */
    IntPoly2 as_poly2(const std::string& xvar = "X", const std::string& yvar = "Y") const;

  private:
    explicit BinaryForm(std::vector<Int> c, long index) : c_(std::move(c)), index_(index) {}
    std::vector<Int> c_;  // c_[i] multiplies X^i Y^(deg - i)
    long index_;
};

/* homogenized cyclotomic as a bivariate polynomial */
IntPoly2 cyclotomic_homogeneous(long d, const std::string& xvar = "X", const std::string& yvar = "Y");

}  // namespace dynirr

#endif
