#include "dynirr/poly2.hpp"

#include <algorithm>

#include "dynirr/detail/kronecker.hpp"

namespace dynirr {

IntPoly2 IntPoly2::from_poly1(const IntPoly1& f, const std::string& v1, const std::string& v2) {
    IntPoly2 r(v1, v2);
    if (f.is_zero()) return r;
    bool first;
    if (f.var() == v1)
        first = true;
    else if (f.var() == v2)
        first = false;
    else
        throw var_mismatch_error("univariate variable '" + f.var() + "' is neither '" + v1 + "' nor '" + v2 + "'");
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        Exp2 e = first ? Exp2{(unsigned)i, 0} : Exp2{0, (unsigned)i};
        r.t_[e] = f.coeffs()[i];
    }
    return r;
}

long IntPoly2::degree_in_var1() const {
    long d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, (long)e.i);
    return d;
}

long IntPoly2::degree_in_var2() const {
    long d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, (long)e.j);
    return d;
}

IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) {
    a.check_same_vars(b);
    Poly2Builder acc(a.is_zero() ? b.var1() : a.var1(), a.is_zero() ? b.var2() : a.var2());
    for (const auto& [e, c] : a.terms()) acc.add(e.i, e.j, c);
    for (const auto& [e, c] : b.terms()) acc.add(e.i, e.j, c);
    return acc.take();
}

IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) {
    a.check_same_vars(b);
    Poly2Builder acc(a.is_zero() ? b.var1() : a.var1(), a.is_zero() ? b.var2() : a.var2());
    for (const auto& [e, c] : a.terms()) acc.add(e.i, e.j, c);
    for (const auto& [e, c] : b.terms()) acc.add(e.i, e.j, -c);
    return acc.take();
}

IntPoly2 operator-(const IntPoly2& a) {
    Poly2Builder acc(a.var1(), a.var2());
    for (const auto& [e, c] : a.terms()) acc.add(e.i, e.j, -c);
    return acc.take();
}

IntPoly2 operator*(const Int& s, const IntPoly2& a) {
    Poly2Builder acc(a.var1(), a.var2());
    for (const auto& [e, c] : a.terms()) acc.add(e.i, e.j, s * c);
    return acc.take();
}

namespace {

constexpr double MUL2_KRONECKER_THRESHOLD = 1.5e6;

IntPoly2 mul_dense_accumulate(const IntPoly2& a, const IntPoly2& b) {
    long da1 = a.degree_in_var1(), db1 = b.degree_in_var1();
    long da2 = a.degree_in_var2(), db2 = b.degree_in_var2();
    std::size_t stride = (std::size_t)(da1 + db1 + 1);
    std::size_t rows = (std::size_t)(da2 + db2 + 1);
    std::vector<Int> grid(stride * rows);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            grid[(ea.i + eb.i) + stride * (std::size_t)(ea.j + eb.j)].addmul(ca, cb);
    Poly2Builder acc(a.var1(), a.var2());
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < stride; ++i) {
            Int& c = grid[i + stride * j];
            if (!c.is_zero()) acc.add((unsigned)i, (unsigned)j, c);
        }
    return acc.take();
}

IntPoly2 mul_kronecker2(const IntPoly2& a, const IntPoly2& b) {
    long da1 = a.degree_in_var1(), db1 = b.degree_in_var1();
    long da2 = a.degree_in_var2(), db2 = b.degree_in_var2();
    std::size_t stride = (std::size_t)(da1 + db1 + 1);
    auto flatten = [stride](const IntPoly2& f, long deg2) {
        std::vector<Int> v(stride * (std::size_t)(deg2 + 1));
        for (const auto& [e, c] : f.terms()) v[e.i + stride * (std::size_t)e.j] = c;
        return v;
    };
    std::vector<Int> va = flatten(a, da2);
    std::vector<Int> vb = flatten(b, db2);
    std::vector<Int> prod = detail::mul_via_kronecker(va, vb);
    Poly2Builder acc(a.var1(), a.var2());
    for (std::size_t s = 0; s < prod.size(); ++s) {
        if (prod[s].is_zero()) continue;
        acc.add((unsigned)(s % stride), (unsigned)(s / stride), prod[s]);
    }
    return acc.take();
}

}  // namespace

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
    a.check_same_vars(b);
    if (a.is_zero() || b.is_zero())
        return IntPoly2(a.is_zero() ? b.var1() : a.var1(), a.is_zero() ? b.var2() : a.var2());
    double pairs = (double)a.term_count() * (double)b.term_count();
    if (pairs < MUL2_KRONECKER_THRESHOLD) return mul_dense_accumulate(a, b);
    return mul_kronecker2(a, b);
}

IntPoly2 IntPoly2::pow(unsigned long e) const {
    IntPoly2 result = IntPoly2::constant(v1_, v2_, Int(1));
    if (e == 0) return result;
    IntPoly2 base = *this;
    while (true) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

std::string IntPoly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Exp2& e = it->first;
        const Int& c = it->second;
        Int a = c.abs();
        if (!s.empty())
            s += (c.sign() < 0) ? " - " : " + ";
        else if (c.sign() < 0)
            s += "-";
        bool unit = a.is_one();
        if ((e.i == 0 && e.j == 0) || !unit) s += a.to_string();
        bool need_star = !unit;
        if (e.i > 0) {
            if (need_star) s += "*";
            s += v1_;
            if (e.i > 1) s += "^" + std::to_string(e.i);
            need_star = true;
        }
        if (e.j > 0) {
            if (need_star) s += "*";
            s += v2_;
            if (e.j > 1) s += "^" + std::to_string(e.j);
        }
    }
    return s;
}

IntPoly2 homog_part(const IntPoly2& f, HomogWhich which) {
    if (f.is_zero()) throw value_error("homogeneous part of zero polynomial");
    long target = which == HomogWhich::lowest ? f.min_total_degree() : *f.total_degree();
    Poly2Builder acc(f.var1(), f.var2());
    for (const auto& [e, c] : f.terms())
        if ((long)(e.i + e.j) == target) acc.add(e.i, e.j, c);
    return acc.take();
}

namespace {

int substituted_slot(const IntPoly2& f, const std::string& var) {
    if (var == f.var1()) return 1;
    if (var == f.var2()) return 2;
    throw var_mismatch_error("unknown variable '" + var + "'");
}

}  // namespace

IntPoly1 substitute(const IntPoly2& f, const std::string& var, const Int& value) {
    if (f.is_zero()) return IntPoly1(var == f.var2() ? f.var1() : f.var2());
    int slot = substituted_slot(f, var);
    std::string out_var = slot == 1 ? f.var2() : f.var1();
    std::vector<Int> coeffs;
    // powers of the value, computed incrementally over the graded scan
    std::vector<Int> pows{Int(1)};
    for (const auto& [e, c] : f.terms()) {
        unsigned sub_e = slot == 1 ? e.i : e.j;
        unsigned keep_e = slot == 1 ? e.j : e.i;
        while (pows.size() <= sub_e) pows.push_back(pows.back() * value);
        if (coeffs.size() <= keep_e) coeffs.resize(keep_e + 1);
        coeffs[keep_e].addmul(c, pows[sub_e]);
    }
    return IntPoly1(out_var, std::move(coeffs));
}

IntPoly1 substitute(const IntPoly2& f, const std::string& var, const IntPoly1& value) {
    int slot = substituted_slot(f, var);
    std::string out_var = slot == 1 ? f.var2() : f.var1();
    if (!value.is_zero() && value.var() != out_var)
        throw var_mismatch_error("substituted value must live in '" + out_var + "'");
    // collect f as a polynomial in `var` with coefficients in Z[out_var], then Horner
    long dsub = slot == 1 ? f.degree_in_var1() : f.degree_in_var2();
    std::vector<IntPoly1> rows((std::size_t)std::max(dsub + 1, 1L), IntPoly1(out_var));
    for (const auto& [e, c] : f.terms()) {
        unsigned sub_e = slot == 1 ? e.i : e.j;
        unsigned keep_e = slot == 1 ? e.j : e.i;
        rows[sub_e] = rows[sub_e] + IntPoly1::monomial(out_var, c, keep_e);
    }
    IntPoly1 r(out_var);
    for (std::size_t i = rows.size(); i-- > 0;) r = r * value + rows[i];
    return r;
}

IntPoly2 exact_div(const IntPoly2& num, const IntPoly2& den) {
    num.check_same_vars(den);
    if (den.is_zero()) throw value_error("division by zero polynomial");
    if (num.is_zero()) return IntPoly2(num.var1(), num.var2());

    // choose a main variable in which the divisor has a constant unit leading coefficient
    auto leading_in = [](const IntPoly2& f, int slot) -> std::pair<long, IntPoly2> {
        long d = slot == 1 ? f.degree_in_var1() : f.degree_in_var2();
        Poly2Builder lead(f.var1(), f.var2());
        for (const auto& [e, c] : f.terms()) {
            long k = slot == 1 ? e.i : e.j;
            if (k == d) lead.add(e.i, e.j, c);
        }
        return {d, lead.take()};
    };
    int slot = 0;
    long dd = -1;
    for (int cand : {2, 1}) {
        auto [d, lead] = leading_in(den, cand);
        if (lead.term_count() == 1) {
            const auto& [e, c] = *lead.terms().begin();
            long other = cand == 1 ? (long)e.j : (long)e.i;
            if (other == 0 && (c.is_one() || c == Int(-1))) {
                slot = cand;
                dd = d;
                break;
            }
        }
    }
    if (slot == 0)
        throw value_error("bivariate exact division requires a divisor with unit leading coefficient");

    auto split_rows = [&](const IntPoly2& f, long rows_count) {
        std::string coeff_var = slot == 1 ? f.var2() : f.var1();
        std::vector<IntPoly1> rows((std::size_t)rows_count, IntPoly1(coeff_var));
        std::vector<std::vector<Int>> tmp((std::size_t)rows_count);
        for (const auto& [e, c] : f.terms()) {
            unsigned main_e = slot == 1 ? e.i : e.j;
            unsigned coeff_e = slot == 1 ? e.j : e.i;
            auto& row = tmp[main_e];
            if (row.size() <= coeff_e) row.resize(coeff_e + 1);
            row[coeff_e] = c;
        }
        for (std::size_t r = 0; r < tmp.size(); ++r) rows[r] = IntPoly1(coeff_var, std::move(tmp[r]));
        return rows;
    };

    long dn = slot == 1 ? num.degree_in_var1() : num.degree_in_var2();
    if (dn < dd) throw exact_division_error("division not exact: divisor degree exceeds dividend");
    std::vector<IntPoly1> rem = split_rows(num, dn + 1);
    std::vector<IntPoly1> div = split_rows(den, dd + 1);
    bool negate = div[(std::size_t)dd].coeffs()[0] == Int(-1);
    std::vector<IntPoly1> quot((std::size_t)(dn - dd) + 1, IntPoly1(rem[0].var()));
    for (long i = dn; i >= dd; --i) {
        IntPoly1 q = negate ? -rem[(std::size_t)i] : rem[(std::size_t)i];
        if (q.is_zero()) continue;
        quot[(std::size_t)(i - dd)] = q;
        for (long j = 0; j <= dd; ++j)
            rem[(std::size_t)(i - dd + j)] = rem[(std::size_t)(i - dd + j)] - q * div[(std::size_t)j];
    }
    for (long i = 0; i < dd; ++i)
        if (!rem[(std::size_t)i].is_zero())
            throw exact_division_error("bivariate division not exact (nonzero remainder)");

    Poly2Builder acc(num.var1(), num.var2());
    for (std::size_t r = 0; r < quot.size(); ++r) {
        const auto& row = quot[r].coeffs();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            unsigned i = slot == 1 ? (unsigned)r : (unsigned)k;
            unsigned j = slot == 1 ? (unsigned)k : (unsigned)r;
            acc.add(i, j, row[k]);
        }
    }
    IntPoly2 q = acc.take();
    if (q * den != num) throw exact_division_error("bivariate division not exact (re-multiplication)");
    return q;
}

std::string ModPoly2::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += std::to_string(it->second);
        if (it->first.i > 0) s += "*" + v1_ + "^" + std::to_string(it->first.i);
        if (it->first.j > 0) s += "*" + v2_ + "^" + std::to_string(it->first.j);
    }
    return s;
}

ModPoly2 reduce_mod(const IntPoly2& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw value_error("modulus " + std::to_string(p) + " is not prime");
    ModPoly2 r(p, f.var1(), f.var2());
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t v = c.mod_ui(p);
        if (v != 0) r.terms()[e] = v;
    }
    return r;
}

}  // namespace dynirr
