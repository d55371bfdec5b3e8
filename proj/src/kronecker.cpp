#include "dynirr/detail/kronecker.hpp"

#include <algorithm>
#include <cstring>

namespace dynirr::detail {

namespace {

constexpr unsigned WORD_BITS = GMP_NUMB_BITS;  // assumed 64, nails disabled

/* add |src| (mpz magnitude) into buf at the given bit offset, rippling carries */
void add_magnitude_at(std::vector<mp_limb_t>& buf, const mpz_srcptr src, unsigned long bit_offset) {
    std::size_t n = mpz_size(src);
    if (n == 0) return;
    const mp_limb_t* limbs = mpz_limbs_read(src);
    std::size_t word = bit_offset / WORD_BITS;
    unsigned shift = bit_offset % WORD_BITS;
    mp_limb_t carry = 0;
    if (shift == 0) {
        carry = mpn_add_n(buf.data() + word, buf.data() + word, limbs, n);
        word += n;
    } else {
        // shifted copy of src into a scratch window, then one mpn_add_n
        std::vector<mp_limb_t> tmp(n + 1);
        tmp[n] = mpn_lshift(tmp.data(), limbs, n, shift);
        carry = mpn_add_n(buf.data() + word, buf.data() + word, tmp.data(), n + 1);
        word += n + 1;
    }
    while (carry) {
        if (word >= buf.size()) throw error("kronecker pack buffer overflow");
        carry = mpn_add_1(buf.data() + word, buf.data() + word, 1, carry);
        ++word;
    }
}

Int from_limbs(const std::vector<mp_limb_t>& buf) {
    Int r;
    if (buf.empty()) return r;
    mpz_import(r.raw(), buf.size(), -1 /*LSW first*/, sizeof(mp_limb_t), 0, 0, buf.data());
    return r;
}

}  // namespace

std::size_t max_coeff_bits(const std::vector<Int>& coeffs) {
    std::size_t m = 0;
    for (const Int& c : coeffs) m = std::max(m, c.bit_size());
    return m;
}

Int pack_eval(const std::vector<Int>& coeffs, unsigned long slot_bits) {
    if (coeffs.empty()) return Int(0);
    std::size_t top_bits = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) top_bits = std::max(top_bits, slot_bits * i + coeffs[i].bit_size());
    std::size_t words = top_bits / WORD_BITS + 3;
    std::vector<mp_limb_t> pos(words, 0), neg(words, 0);
    bool has_neg = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Int& c = coeffs[i];
        if (c.is_zero()) continue;
        if (c.sign() > 0) {
            add_magnitude_at(pos, c.raw(), slot_bits * i);
        } else {
            add_magnitude_at(neg, c.raw(), slot_bits * i);
            has_neg = true;
        }
    }
    Int r = from_limbs(pos);
    if (has_neg) {
        Int n = from_limbs(neg);
        r -= n;
    }
    return r;
}

std::vector<Int> signed_decode(const Int& packed, unsigned long slot_bits, std::size_t max_slots) {
    std::vector<Int> out;
    if (packed.is_zero()) return out;
    bool negate = packed.sign() < 0;
    // |packed| = sum c_i 2^(M i) with |c_i| < 2^(M-1): walk the plain base-2^M
    // digits with a carry, flipping digits >= 2^(M-1) to negative.
    const mpz_srcptr w = packed.raw();
    std::size_t nlimbs = mpz_size(w);
    const mp_limb_t* limbs = mpz_limbs_read(w);
    std::size_t total_bits = nlimbs * WORD_BITS;
    std::size_t slot_words = slot_bits / WORD_BITS + 2;
    std::vector<mp_limb_t> scratch(slot_words + 1);
    unsigned carry = 0;
    Int two_to_M = Int::pow2(slot_bits);
    std::size_t slot_cap = max_slots + WORD_BITS / slot_bits + 4;
    for (std::size_t slot = 0;; ++slot) {
        unsigned long bit0 = slot_bits * slot;
        if (bit0 >= total_bits && carry == 0) break;
        if (out.size() >= slot_cap)
            throw error("kronecker decode overran the expected slot count");
        // extract slot_bits starting at bit0
        std::size_t w0 = bit0 / WORD_BITS;
        unsigned shift = bit0 % WORD_BITS;
        std::size_t avail = (w0 < nlimbs) ? std::min(slot_words, nlimbs - w0) : 0;
        std::fill(scratch.begin(), scratch.end(), 0);
        if (avail > 0) {
            if (shift == 0)
                std::memcpy(scratch.data(), limbs + w0, avail * sizeof(mp_limb_t));
            else {
                mpn_rshift(scratch.data(), limbs + w0, avail, shift);
                if (w0 + avail < nlimbs)
                    scratch[avail - 1] |= limbs[w0 + avail] << (WORD_BITS - shift);
            }
        }
        // mask to slot_bits
        std::size_t keep_words = (slot_bits + WORD_BITS - 1) / WORD_BITS;
        unsigned top = slot_bits % WORD_BITS;
        for (std::size_t i = keep_words; i < scratch.size(); ++i) scratch[i] = 0;
        if (top) scratch[keep_words - 1] &= (((mp_limb_t)1 << top) - 1);
        Int digit;
        mpz_import(digit.raw(), keep_words, -1, sizeof(mp_limb_t), 0, 0, scratch.data());
        if (carry) mpz_add_ui(digit.raw(), digit.raw(), carry);
        // signed range reduction
        if (mpz_tstbit(digit.raw(), slot_bits - 1) || mpz_cmp(digit.raw(), two_to_M.raw()) >= 0) {
            digit -= two_to_M;
            carry = 1;
        } else {
            carry = 0;
        }
        out.push_back(std::move(digit));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    if (out.size() > max_slots) throw error("kronecker decode exceeded the coefficient bound");
    if (negate)
        for (Int& c : out) c = -c;
    return out;
}

unsigned long mul_slot_bits(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::size_t bits = max_coeff_bits(a) + max_coeff_bits(b);
    std::size_t nmin = std::min(a.size(), b.size());
    unsigned long extra = 1;
    while ((1ull << extra) < nmin) ++extra;
    return (unsigned long)(bits + extra + 2);
}

std::vector<Int> mul_via_kronecker(const std::vector<Int>& a, const std::vector<Int>& b) {
    unsigned long M = mul_slot_bits(a, b);
    Int pa = pack_eval(a, M);
    Int pb = pack_eval(b, M);
    Int prod = pa * pb;
    return signed_decode(prod, M, a.size() + b.size() - 1);
}

}  // namespace dynirr::detail
