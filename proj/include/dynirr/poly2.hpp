#ifndef DYNIRR_POLY2_HPP
#define DYNIRR_POLY2_HPP

/* Sparse bivariate polynomials over Z, stored as a map from exponent pairs
   to nonzero coefficients, graded by total degree so the lowest and highest
   homogeneous parts are contiguous ranges. */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynirr/int.hpp"
#include "dynirr/poly1.hpp"

namespace dynirr {

struct Exp2 {
    unsigned i = 0;  // exponent of the first variable
    unsigned j = 0;  // exponent of the second variable
    friend bool operator==(const Exp2&, const Exp2&) = default;
};

struct GradedLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        unsigned ta = a.i + a.j, tb = b.i + b.j;
        if (ta != tb) return ta < tb;
        return a.i < b.i;
    }
};

class IntPoly2 {
  public:
    using TermMap = std::map<Exp2, Int, GradedLess>;

    IntPoly2() : v1_("a"), v2_("b") {}
    IntPoly2(std::string v1, std::string v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
        if (v1_ == v2_) throw var_mismatch_error("bivariate variables must differ");
    }
    IntPoly2(std::string v1, std::string v2, TermMap terms)
        : v1_(std::move(v1)), v2_(std::move(v2)), t_(std::move(terms)) {
        if (v1_ == v2_) throw var_mismatch_error("bivariate variables must differ");
        prune();
    }

    static IntPoly2 monomial(std::string v1, std::string v2, Int coeff, unsigned i, unsigned j) {
        IntPoly2 r(std::move(v1), std::move(v2));
        if (!coeff.is_zero()) r.t_[{i, j}] = std::move(coeff);
        return r;
    }
    static IntPoly2 constant(std::string v1, std::string v2, Int value) {
        return monomial(std::move(v1), std::move(v2), std::move(value), 0, 0);
    }
    /* lift a univariate polynomial into (v1, v2); its variable must be one of them */
    static IntPoly2 from_poly1(const IntPoly1& f, const std::string& v1, const std::string& v2);

    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    std::optional<long> total_degree() const {
        if (t_.empty()) return std::nullopt;
        auto& e = t_.rbegin()->first;
        return (long)(e.i + e.j);
    }
    long total_degree_or(long when_zero) const {
        return t_.empty() ? when_zero : (long)(t_.rbegin()->first.i + t_.rbegin()->first.j);
    }
    long min_total_degree() const {
        if (t_.empty()) throw value_error("minimum degree of zero polynomial");
        return (long)(t_.begin()->first.i + t_.begin()->first.j);
    }
    long degree_in_var1() const;
    long degree_in_var2() const;
    Int coeff(unsigned i, unsigned j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Int(0) : it->second;
    }

    friend bool operator==(const IntPoly2& a, const IntPoly2& b) {
        if (a.t_.size() != b.t_.size()) return false;
        if (!a.t_.empty() && (a.v1_ != b.v1_ || a.v2_ != b.v2_)) return false;
        return a.t_ == b.t_;
    }
    friend bool operator!=(const IntPoly2& a, const IntPoly2& b) { return !(a == b); }

    friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b);
    friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b);
    friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
    friend IntPoly2 operator-(const IntPoly2& a);
    friend IntPoly2 operator*(const Int& s, const IntPoly2& a);
    IntPoly2 pow(unsigned long e) const;

    std::string to_string() const;

    void check_same_vars(const IntPoly2& o) const {
        if (!is_zero() && !o.is_zero() && (v1_ != o.v1_ || v2_ != o.v2_))
            throw var_mismatch_error("bivariate variable mismatch");
    }

  private:
    std::string v1_, v2_;
    TermMap t_;

    void prune() {
        for (auto it = t_.begin(); it != t_.end();) {
            if (it->second.is_zero())
                it = t_.erase(it);
            else
                ++it;
        }
    }
    friend class Poly2Builder;
};

/* accumulating builder; used by the arithmetic kernels */
class Poly2Builder {
  public:
    Poly2Builder(std::string v1, std::string v2) : r_(std::move(v1), std::move(v2)) {}
    void add(unsigned i, unsigned j, const Int& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = r_.t_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r_.t_.erase(it);
        }
    }
    IntPoly2 take() { return std::move(r_); }

  private:
    IntPoly2 r_;
};

enum class HomogWhich { lowest, highest };

/* sum of the terms of minimal (resp. maximal) total degree */
IntPoly2 homog_part(const IntPoly2& f, HomogWhich which);

/* substitute one variable by an integer or a univariate polynomial in the
   other variable; the result is univariate in the remaining variable */
IntPoly1 substitute(const IntPoly2& f, const std::string& var, const Int& value);
IntPoly1 substitute(const IntPoly2& f, const std::string& var, const IntPoly1& value);

/* exact quotient; the divisor must have a unit leading coefficient when
   viewed in one of the two variables */
IntPoly2 exact_div(const IntPoly2& num, const IntPoly2& den);

/* bivariate mod-p image (canonical residues 0..p-1) */
class ModPoly2 {
  public:
    ModPoly2(std::uint64_t p, std::string v1, std::string v2)
        : p_(p), v1_(std::move(v1)), v2_(std::move(v2)) {}
    std::uint64_t modulus() const { return p_; }
    std::map<Exp2, std::uint64_t, GradedLess>& terms() { return t_; }
    const std::map<Exp2, std::uint64_t, GradedLess>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    friend bool operator==(const ModPoly2& a, const ModPoly2& b) {
        return a.p_ == b.p_ && a.t_ == b.t_;
    }
    std::string to_string() const;
    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }

  private:
    std::uint64_t p_;
    std::string v1_, v2_;
    std::map<Exp2, std::uint64_t, GradedLess> t_;
};

ModPoly2 reduce_mod(const IntPoly2& f, std::uint64_t p);

}  // namespace dynirr

#endif
