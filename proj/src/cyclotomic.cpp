#include "dynirr/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace dynirr {

namespace {

std::map<long, IntPoly1>& cyclo_cache() {
    static std::map<long, IntPoly1> cache;
    return cache;
}
std::mutex cyclo_mutex;

IntPoly1 cyclotomic_uncached(long d) {
    // (x^d - 1) / prod of the lower cyclotomics
    std::vector<Int> xn(d + 1);
    xn[0] = Int(-1);
    xn[(std::size_t)d] = Int(1);
    IntPoly1 num("x", std::move(xn));
    for (long e : divisors_of(d)) {
        if (e == d) continue;
        num = exact_div(num, cyclotomic_poly(e, "x"));
    }
    return num;
}

}  // namespace

IntPoly1 cyclotomic_poly(long d, const std::string& var) {
    if (d < 1) throw value_error("cyclotomic index must be positive");
    IntPoly1 base("x");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        auto it = cyclo_cache().find(d);
        if (it != cyclo_cache().end()) {
            base = it->second;
        }
    }
    if (base.is_zero()) {
        base = cyclotomic_uncached(d);
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        cyclo_cache().emplace(d, base);
    }
    if (var == "x") return base;
    return IntPoly1(var, base.coeffs());
}

BinaryForm BinaryForm::cyclotomic(long d) {
    IntPoly1 c = cyclotomic_poly(d);
    // Phi_d(X, Y) = Y^phi(d) * phi_d(X/Y): coefficient of X^i Y^(phi-i) is c_i
    return BinaryForm(c.coeffs(), d);
}

BinaryForm BinaryForm::power_sum(long D) {
    if (D < 2) throw value_error("power_sum requires D >= 2");
    std::vector<Int> c((std::size_t)D, Int(1));
    return BinaryForm(std::move(c), -D);
}

Int BinaryForm::eval(const Int& x, const Int& y) const {
    // Horner in x, with a running power of y for the tail
    Int r(0);
    Int ypow(1);
    long n = degree();
    // sum c_i x^i y^(n-i) = x^n (c_n + (y/x)(...)) evaluated without fractions:
    // process from the top coefficient down, multiplying by x each step and
    // adding c_i * y^(n-i).
    for (long i = n; i >= 0; --i) {
        r *= x;
        if (!c_[(std::size_t)i].is_zero()) r.addmul(c_[(std::size_t)i], ypow);
        if (i > 0) ypow *= y;
    }
    return r;
}

IntPoly1 BinaryForm::eval(const IntPoly1& x, const IntPoly1& y) const {
    IntPoly1 r(x.is_zero() ? y.var() : x.var());
    IntPoly1 ypow = IntPoly1::constant(r.var(), Int(1));
    long n = degree();
    std::vector<IntPoly1> tail((std::size_t)n + 1, r);
    for (long i = n; i >= 0; --i) {
        tail[(std::size_t)i] = c_[(std::size_t)i] * ypow;
        if (i > 0) ypow = ypow * y;
    }
    for (long i = n; i >= 0; --i) {
        r = r * x;
        r = r + tail[(std::size_t)i];
    }
    return r;
}

Int BinaryForm::at_one_one() const {
    Int s(0);
    for (const Int& c : c_) s += c;
    return s;
}

IntPoly2 BinaryForm::as_poly2(const std::string& xvar, const std::string& yvar) const {
    Poly2Builder acc(xvar, yvar);
    long n = degree();
    for (long i = 0; i <= n; ++i) acc.add((unsigned)i, (unsigned)(n - i), c_[(std::size_t)i]);
    return acc.take();
}

IntPoly2 cyclotomic_homogeneous(long d, const std::string& xvar, const std::string& yvar) {
    return BinaryForm::cyclotomic(d).as_poly2(xvar, yvar);
}

}  // namespace dynirr
