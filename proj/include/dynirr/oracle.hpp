#ifndef DYNIRR_ORACLE_HPP
#define DYNIRR_ORACLE_HPP

/* Independent numeric validation: simultaneous root finding (Aberth-Ehrlich)
   for the generated univariate polynomials, followed by double-precision
   orbit iteration confirming the claimed preperiod and period of the
   critical point at each root. */

#include <complex>
#include <string>
#include <vector>

#include "dynirr/poly1.hpp"

namespace dynirr::oracle {

using cplx = std::complex<double>;

struct RootReport {
    std::vector<cplx> roots;  // deg(f) entries, with multiplicity
    std::vector<double> backward_errors;
    bool all_converged = false;
    bool multiplicity_anomaly = false;  // two roots suspiciously close
    bool vieta_ok = false;              // sum of roots vs -c_(n-1)/c_n
};

RootReport all_roots(const IntPoly1& f, double backward_tol = 1e-10, int max_iter = 500);

enum class FamilyTag { cubic_slice, quad_rational, unicritical };

struct DynamicsReport {
    FamilyTag family{};
    cplx parameter{};
    long claimed_preperiod = 0, claimed_period = 0;
    long observed_preperiod = -1, observed_period = -1;
    double residual = 1e300;       // orbit distance at the claimed coincidence
    double earlier_margin = 0.0;   // miss distance one step earlier
    std::string verdict;           // confirmed | mismatch | escaped | pole | no-coincidence
    bool confirmed() const { return verdict == "confirmed"; }
};


/* maps: cubic_slice       z -> z^3 + param           critical point 0
         quad_rational     G_{a,b},  param = a, b given separately; critical point 1
         unicritical       z -> param z^D + 1          critical point 0 */
DynamicsReport classify_orbit(FamilyTag family, cplx param, cplx b_or_unused, long D,
                              long claimed_k, long claimed_n, double tol = 1e-8,
                              long max_steps = 128);

struct FamilyValidation {
    std::vector<DynamicsReport> reports;
    std::size_t confirmed = 0;
    std::size_t total = 0;
    bool root_count_ok = false;
    bool roots_converged = false;
    bool omega_ok = true;  // unicritical only: orbit ratio is a primitive d-th root of unity
    bool all_confirmed() const {
        return total > 0 && confirmed == total && root_count_ok && roots_converged && omega_ok;
    }
};

/* roots of s_k, map z^3 + b, claimed preperiod k to a fixed point */
FamilyValidation validate_cubic_slice(const IntPoly1& s_k, long k, double tol = 1e-8);

/* roots of r_k, map a z (2 - z), critical point 1 with preperiod k to 0 */
FamilyValidation validate_quad_slice(const IntPoly1& r_k, long k, double tol = 1e-8);

/* roots of R_{k,n,d}, map a z^D + 1, claimed (k, n), plus the root-of-unity
   ratio check for the orbit entering its cycle */
FamilyValidation validate_unicritical(const IntPoly1& r_knd, long D, long k, long n, long d,
                                      double tol = 1e-8);

}  // namespace dynirr::oracle

#endif
