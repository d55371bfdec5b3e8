#ifndef DYNIRR_DETAIL_KRONECKER_HPP
#define DYNIRR_DETAIL_KRONECKER_HPP

/* Kronecker substitution: coefficient vectors are packed into a single
   integer at t = 2^slot_bits, so that polynomial multiplication and exact
   division reduce to GMP integer operations.  Signed coefficients are
   recovered from the base-2^M digits of the result: a digit at or above
   2^(M-1) encodes a negative coefficient with a carry into the next slot.
   Correct decoding requires |coefficient| < 2^(M-1) for every slot, which
   callers must guarantee via an a-priori bound. */

#include <cstddef>
#include <vector>

#include "dynirr/int.hpp"

namespace dynirr::detail {

/* sum of c[i] * 2^(slot_bits * i); coefficients may exceed one slot
   (the packing is plain integer evaluation, overlaps just add). */
Int pack_eval(const std::vector<Int>& coeffs, unsigned long slot_bits);

/* inverse of pack_eval under the signed-digit convention above */
std::vector<Int> signed_decode(const Int& packed, unsigned long slot_bits, std::size_t max_slots);

/* slot width guaranteeing carry-free products of a and b */
unsigned long mul_slot_bits(const std::vector<Int>& a, const std::vector<Int>& b);

std::size_t max_coeff_bits(const std::vector<Int>& coeffs);

/* coefficient convolution of a and b via one GMP multiplication */
std::vector<Int> mul_via_kronecker(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace dynirr::detail

#endif
