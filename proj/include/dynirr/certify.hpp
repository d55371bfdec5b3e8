#ifndef DYNIRR_CERTIFY_HPP
#define DYNIRR_CERTIFY_HPP

/* Irreducibility certification: the classic Eisenstein criterion, its
   generalization to A = B^N mod p with a resultant valuation bound, the
   origin-criterion hypothesis check for bivariate polynomials, and the
   end-to-end pipeline that certifies preperiodic factors.

   Verdicts are three-valued.  The criteria are sufficient, never necessary,
   so a failed hypothesis yields "inconclusive", not "reducible". */

#include <optional>
#include <string>
#include <vector>

#include "dynirr/int.hpp"
#include "dynirr/poly1.hpp"
#include "dynirr/poly2.hpp"
#include "dynirr/unicritical.hpp"

namespace dynirr::certify {

enum class Verdict { irreducible, inconclusive, out_of_hypotheses };

std::string verdict_name(Verdict v);

struct EisensteinCertificate {
    std::string variant;  // "classic" | "generalized"
    IntPoly1 poly;        // A
    std::uint64_t poly_digest = 0;
    long p = 0;

    // classic hypotheses
    bool lead_not_div_p = false;
    bool nonleading_div_p = false;
    bool const_not_div_p2 = false;

    // generalized hypotheses
    std::optional<IntPoly1> base;  // B
    std::optional<long> exponent;  // N with A = B^N mod p
    bool power_structure_ok = false;
    bool base_irreducible_mod_p = false;
    std::optional<Int> resultant_value;       // resultant(A, B)
    std::optional<long> resultant_valuation;  // v_p; empty when the resultant is 0
    long valuation_bound = 0;                 // 2 deg(B)
    bool resultant_bound_ok = false;

    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> failed;  // names of the hypotheses that failed
};

std::uint64_t poly_digest(const IntPoly1& f);

EisensteinCertificate eisenstein_classic(const IntPoly1& f, long p);
EisensteinCertificate eisenstein_general(const IntPoly1& A, const IntPoly1& B, long p);

/* re-run every hypothesis of a certificate from its recorded fields */
bool recheck(const EisensteinCertificate& cert);

struct OriginReport {
    Int constant_term;
    Int linear_var1;  // coefficient of the first variable
    Int linear_var2;  // coefficient of the second variable
    bool vanishes_at_origin = false;
    bool linear_part_nonzero = false;
    bool hypotheses_hold = false;  // both; Q-irreducibility then transfers to C
};
OriginReport origin_criterion_hypotheses(const IntPoly2& f);

struct PipelineCertificate {
    long D = 0, p = 0, e = 0, k = 0, n = 0, d = 0;
    Verdict verdict = Verdict::inconclusive;
    std::string detail;
    bool base_irreducible = false;
    long power_exponent = -1;
    Int resultant_value;
    std::optional<long> resultant_valuation;
    Int expected_resultant_abs;  // p^(deg B)
    bool resultant_shape_ok = false;
    EisensteinCertificate eisenstein;
    double seconds = 0.0;
};

/* build R_{k,n,d}, pick B (= a for n = 1, R_n otherwise), check B mod p
   irreducible, A mod p a power of B, and the resultant valuation; assemble
   the generalized Eisenstein certificate */
PipelineCertificate theorem_pipeline(long D, long k, long n, long d,
                                     long budget = uni::default_budget());
PipelineCertificate theorem_pipeline(const uni::Context& ctx, long k, long n, long d);

}  // namespace dynirr::certify

#endif
