#ifndef DYNIRR_QUAD_FAMILY_HPP
#define DYNIRR_QUAD_FAMILY_HPP

/* The quadratic rational family G_{a,b}(z) = a z (b - z) / (1 + (b-2) z)
   with marked points 0, infinity and critical point 1.  The orbit of the
   critical value a is P_j / Q_j with

       P_2 = a,  Q_2 = 1,
       P_{j+1} = a P_j (b Q_j - P_j),  Q_{j+1} = Q_j^2 + (b-2) P_j Q_j,

   and R_k = P_k - b Q_k cuts out the prefixed locus.  On the slice b = 2
   the map is the quadratic polynomial a z (2 - z) and r_k = R_k(a, 2). */

#include <vector>

#include "dynirr/certify.hpp"
#include "dynirr/poly1.hpp"
#include "dynirr/poly2.hpp"
#include "dynirr/report.hpp"

namespace dynirr::quad {

long default_budget();

struct Instance {
    long k = 0;
    std::vector<IntPoly2> P_seq;  // P_2 .. P_k  (P_seq[j] = P_j, slots 0,1 unused)
    std::vector<IntPoly2> Q_seq;
    IntPoly2 R;  // P_k - b Q_k
    IntPoly1 r;  // R(a, 2), degree 2^(k-1) - 1, constant coefficient -2
};

Instance build(long k, long budget = default_budget());

StructureReport verify_structure(const Instance& inst);

struct Certificate {
    certify::EisensteinCertificate eisenstein;  // on -r_k normalized monic (p = 2)
    long mod2_exponent = -1;                    // r_k mod 2 = a^exponent
    bool exponent_equals_degree = false;
    std::string note;
};
/* Eisenstein at p = 2 for r_k, including the mod-2 pure-power fact.  The
   mod-2 exponent is pinned to deg r_k = 2^(k-1) - 1; an exponent of 2^(k-1)
   would exceed the degree and is rejected. */
Certificate certify_r(const Instance& inst);

/* exact rational iteration of G_{a,b} from z = a, compared against
   P_k(a,b) / Q_k(a,b); throws value_error when the orbit meets a pole */
bool check_rational_point(const Instance& inst, const Rat& a, const Rat& b);

Rat evaluate_rat(const IntPoly2& f, const Rat& a, const Rat& b);

}  // namespace dynirr::quad

#endif
