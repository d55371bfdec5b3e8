#ifndef DYNIRR_CUBIC_FAMILY_HPP
#define DYNIRR_CUBIC_FAMILY_HPP

/* The cubic family F_{a,b}(z) = z^3 - 3a^2 z + 2a^3 + b with marked critical
   orbit P_j(a,b) = F^j(a), the prefixed-parameter polynomials
   Q_k = H(P_{k-1}, P_k) = (b-a) R_k, and the unicritical slice a = 0 with
   q_k = b r_k = b^2 s_k. */

#include <vector>

#include "dynirr/certify.hpp"
#include "dynirr/poly1.hpp"
#include "dynirr/poly2.hpp"
#include "dynirr/report.hpp"

namespace dynirr::cubic {

long default_budget();  // shared DYNIRR_BUDGET override, else 5000 (total degree)

struct Instance {
    long k = 0;
    std::vector<IntPoly2> P_seq;  // P_0 .. P_k
    IntPoly2 Q;                   // P_{k-1}^2 + P_{k-1} P_k + P_k^2 - 3a^2
    IntPoly2 R;                   // Q / (b - a)
    IntPoly1 r;                   // R(0, b)
    IntPoly1 s;                   // r / b, monic of degree 2*3^(k-1) - 2 with s(0) = 3
};

/* the a = 0 slice on its own: p_1 = b, p_{j+1} = p_j^3 + b,
   q_k = p_{k-1}^2 + p_{k-1} p_k + p_k^2 = b r_k = b^2 s_k */
struct Slice {
    long k = 0;
    std::vector<IntPoly1> p_seq;  // p_1 .. p_k  (p_seq[j] = p_j, slot 0 unused)
    IntPoly1 q, r, s;
};

Instance build(long k, long budget = default_budget());
Slice build_slice(long k, long budget = default_budget());

/* the structural checks: lowest/highest homogeneous parts, R(a,a) = 6a,
   degree identities, the exact factorization Q = (b-a) R, the slice tie-in
   and the mod-3 orbit congruence */
StructureReport verify_structure(const Instance& inst);

/* classic Eisenstein certificate for s_k at p = 3 */
certify::EisensteinCertificate certify_s(const Instance& inst);
certify::EisensteinCertificate certify_s(const Slice& slice);

}  // namespace dynirr::cubic

#endif
