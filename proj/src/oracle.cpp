#include "dynirr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dynirr::oracle {

namespace {

using cplxl = std::complex<long double>;

/* split conversion keeps ~106 bits of each coefficient, enough to polish
   roots to the 64-bit extended-precision floor */
std::vector<cplxl> to_longdouble_coeffs(const IntPoly1& f) {
    std::vector<cplxl> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Int& v = f.coeffs()[i];
        double hi = v.get_double();
        Int hi_int;
        mpz_set_d(hi_int.raw(), hi);
        double lo = (v - hi_int).get_double();
        c[i] = cplxl((long double)hi + (long double)lo, 0.0L);
    }
    return c;
}

cplxl horner_l(const std::vector<cplxl>& c, cplxl z) {
    cplxl r = 0.0L;
    for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

/* exact complex-dyadic Horner: returns f(z) * 2^(s*deg f) for
   z = (zr + i zi) / 2^s given as exact integer mantissas */
void horner_dyadic(const IntPoly1& f, const Int& zr, const Int& zi, long s, Int* out_re,
                   Int* out_im) {
    long deg = f.degree_or(0);
    Int ar, ai;  // accumulator, scale s*(deg - i) after absorbing c_i
    for (long i = deg; i >= 0; --i) {
        if (i < deg) {
            Int nr = ar * zr - ai * zi;
            Int ni = ar * zi + ai * zr;
            ar = std::move(nr);
            ai = std::move(ni);
        }
        if (!f.coeffs()[(std::size_t)i].is_zero()) {
            Int scaled = f.coeffs()[(std::size_t)i];
            mpz_mul_2exp(scaled.raw(), scaled.raw(), (unsigned long)(s * (deg - i)));
            ar += scaled;
        }
    }
    *out_re = std::move(ar);
    *out_im = std::move(ai);
}

long double scaled_to_ld(const Int& v, long shift) {
    if (v.is_zero()) return 0.0L;
    long e = 0;
    double m = v.get_double_2exp(&e);
    return scalblnl((long double)m, e + shift);
}

/* Newton with exactly evaluated f and f'; double/extended-precision Horner
   on these coefficient sizes has a noise floor far above one ulp of the
   root, which the repelling-orbit checks then amplify past the tolerance */
/* exact f(z)/f'(z) via the dyadic integer Horner */
cplxl newton_quotient_exact(const IntPoly1& f, const IntPoly1& fprime, cplxl z) {
    const long s = 128;
    long degf = f.degree_or(0);
    auto dy = [&](double v) {
        if (v == 0.0) return Int(0);
        int e = 0;
        double m = std::frexp(v, &e);
        Int r;
        mpz_set_d(r.raw(), std::ldexp(m, 53));
        long sh = s + e - 53;
        if (sh >= 0)
            mpz_mul_2exp(r.raw(), r.raw(), (unsigned long)sh);
        else
            mpz_tdiv_q_2exp(r.raw(), r.raw(), (unsigned long)(-sh));
        return r;
    };
    auto to_dyadic = [&](long double x) {
        double h = (double)x;
        double l = (double)(x - (long double)h);
        return dy(h) + dy(l);
    };
    Int zr = to_dyadic(z.real()), zi = to_dyadic(z.imag());
    Int fr, fi, gr, gi;
    horner_dyadic(f, zr, zi, s, &fr, &fi);
    horner_dyadic(fprime, zr, zi, s, &gr, &gi);
    long shift = -(long)(s * degf);
    cplxl F(scaled_to_ld(fr, shift), scaled_to_ld(fi, shift));
    long shift_g = -(long)(s * (degf - 1));
    cplxl G(scaled_to_ld(gr, shift_g), scaled_to_ld(gi, shift_g));
    if (std::abs(G) == 0.0L) return cplxl(0, 0);
    return F / G;
}

cplxl refine_root(const IntPoly1& f, const std::vector<cplxl>& c, const std::vector<cplxl>& d,
                  cplx z0, long double* final_step_rel = nullptr) {
    // Exact-evaluation Newton only.  A floating-point pre-polish looks like
    // an optimization but its steps are pure noise near roots whose |f'| sits
    // far below the coefficient scale, and such a step can carry the point
    // into a neighboring basin.
    (void)c;
    (void)d;
    cplxl z(z0.real(), z0.imag());
    if (final_step_rel) *final_step_rel = 1e300L;
    auto finite = [](cplxl v) {
        return std::isfinite((double)v.real()) && std::isfinite((double)v.imag());
    };
    if (!finite(z)) return z;
    cplxl last_good = z;
    IntPoly1 fprime = f.derivative();
    const long s = 128;
    long degf = f.degree_or(0);
    for (int it = 0; it < 24; ++it) {
        // z as exact dyadic numbers via a hi/lo double split of each part
        auto dy = [&](double v) {  // nearest Int to v * 2^s, exact within the grid
            if (v == 0.0) return Int(0);
            int e = 0;
            double m = std::frexp(v, &e);
            Int r;
            mpz_set_d(r.raw(), std::ldexp(m, 53));  // integral by construction
            long sh = s + e - 53;
            if (sh >= 0)
                mpz_mul_2exp(r.raw(), r.raw(), (unsigned long)sh);
            else
                mpz_tdiv_q_2exp(r.raw(), r.raw(), (unsigned long)(-sh));
            return r;
        };
        auto to_dyadic = [&](long double x) {
            double h = (double)x;
            double l = (double)(x - (long double)h);
            return dy(h) + dy(l);
        };
        Int zr = to_dyadic(z.real()), zi = to_dyadic(z.imag());
        Int fr, fi, gr, gi;
        horner_dyadic(f, zr, zi, s, &fr, &fi);
        horner_dyadic(fprime, zr, zi, s, &gr, &gi);
        // undoing the dyadic scales gives the true values of f and f'
        long shift = -(long)(s * degf);
        cplxl F(scaled_to_ld(fr, shift), scaled_to_ld(fi, shift));
        long shift_g = -(long)(s * (degf - 1));
        cplxl G(scaled_to_ld(gr, shift_g), scaled_to_ld(gi, shift_g));
        if (std::abs(G) == 0.0L) break;
        cplxl step = F / G;
        z -= step;
        if (!finite(z)) return last_good;
        last_good = z;
        if (final_step_rel)
            *final_step_rel = std::abs(step) / std::max((long double)1, std::abs(z));
        if (std::abs(step) < 1e-22L * std::max((long double)1, std::abs(z))) break;
    }
    return z;
}

}  // namespace

RootReport all_roots(const IntPoly1& f, double backward_tol, int max_iter) {
    using CL = std::complex<long double>;
    RootReport rep;
    long n = f.degree_or(-1);
    if (n < 1) throw value_error("all_roots needs a nonconstant polynomial");
    // even polynomials (the cubic-slice family, for one) split through
    // y = x^2: solve the half-degree polynomial and take both square roots,
    // which more than halves the clustering the iteration has to untangle
    if (n >= 16 && n % 2 == 0) {
        bool even = true;
        for (long i = 1; i <= n; i += 2) even = even && f.coeff((std::size_t)i).is_zero();
        if (even) {
            std::vector<Int> half((std::size_t)(n / 2) + 1);
            for (long i = 0; i <= n / 2; ++i) half[(std::size_t)i] = f.coeff((std::size_t)(2 * i));
            RootReport inner = all_roots(IntPoly1(f.var(), std::move(half)), backward_tol, max_iter);
            std::vector<CL> c((std::size_t)n + 1);
            for (std::size_t i = 0; i < c.size(); ++i) {
                const Int& v = f.coeffs()[i];
                double hi = v.get_double();
                Int hi_int;
                mpz_set_d(hi_int.raw(), hi);
                double lo = (v - hi_int).get_double();
                c[i] = CL((long double)hi + (long double)lo, 0.0L);
            }
            std::vector<CL> d(c.size() - 1);
            for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = (long double)i * c[i];
            rep.all_converged = inner.all_converged;
            rep.multiplicity_anomaly = inner.multiplicity_anomaly;
            CL sum = 0.0L;
            for (const cplx& y : inner.roots) {
                CL root = std::sqrt(CL(y.real(), y.imag()));
                for (CL signed_root : {root, -root}) {
                    long double fin = 1e300L;
                    CL locked = refine_root(f, c, d,
                                            cplx((double)signed_root.real(), (double)signed_root.imag()),
                                            &fin);
                    if (fin > 1e-13L) rep.all_converged = false;
                    rep.roots.push_back(cplx((double)locked.real(), (double)locked.imag()));
                    rep.backward_errors.push_back((double)fin);
                    sum += locked;
                }
            }
            rep.vieta_ok = inner.vieta_ok && std::abs(sum) < 1e-8L * (long double)n;
            return rep;
        }
    }
    // extended-precision coefficients (hi/lo split); the clustered root sets
    // of these families push double Horner past its noise floor well before
    // the degree cap
    std::vector<CL> c((std::size_t)n + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Int& v = f.coeffs()[i];
        double hi = v.get_double();
        Int hi_int;
        mpz_set_d(hi_int.raw(), hi);
        double lo = (v - hi_int).get_double();
        c[i] = CL((long double)hi + (long double)lo, 0.0L);
    }
    std::vector<CL> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = (long double)i * c[i];
    auto horner = [](const std::vector<CL>& cc, CL zz) {
        CL r = 0.0L;
        for (std::size_t i = cc.size(); i-- > 0;) r = r * zz + cc[i];
        return r;
    };
    auto coeff_scale = [&](CL zz) {
        long double az = std::abs(zz), s = 0.0L, zp = 1.0L;
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += std::abs(c[i]) * zp;
            zp *= az;
        }
        return std::max(s, (long double)1e-300);
    };

    // Fujiwara root bound 2 * max_k |c_(n-k)/c_n|^(1/k), computed in log2
    // space from the exact coefficients so huge coefficients cannot overflow
    double lead_bits;
    {
        long e = 0;
        double m = f.leading().get_double_2exp(&e);
        lead_bits = std::log2(std::abs(m)) + (double)e;
    }
    double radius_log = -1074.0;
    for (long kk = 1; kk <= n; ++kk) {
        const Int& ck = f.coeffs()[(std::size_t)(n - kk)];
        if (ck.is_zero()) continue;
        long e = 0;
        double m = ck.get_double_2exp(&e);
        double bits = std::log2(std::abs(m)) + (double)e - lead_bits;
        radius_log = std::max(radius_log, bits / (double)kk);
    }
    double radius = 2.0 * std::exp2(std::min(radius_log, 512.0));
    radius = std::max(radius, 1e-3);
    // Newton-polygon initialization: the upper convex hull of (i, log2|c_i|)
    // predicts the root moduli edge by edge, which keeps the iteration from
    // having to migrate points across clusters
    const double pi = 3.14159265358979323846;
    std::vector<CL> z;
    z.reserve((std::size_t)n);
    {
        std::vector<std::pair<long, double>> pts;
        for (long i = 0; i <= n; ++i) {
            const Int& ci = f.coeffs()[(std::size_t)i];
            if (ci.is_zero()) continue;
            long e = 0;
            double m = ci.get_double_2exp(&e);
            pts.push_back({i, std::log2(std::abs(m)) + (double)e});
        }
        std::vector<std::pair<long, double>> hull;  // upper hull, i ascending
        for (const auto& p : pts) {
            while (hull.size() >= 2) {
                const auto& a = hull[hull.size() - 2];
                const auto& b = hull[hull.size() - 1];
                // keep the chain concave: slope(a,b) >= slope(b,p)
                if ((b.second - a.second) * (double)(p.first - b.first) <=
                    (p.second - b.second) * (double)(b.first - a.first))
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(p);
        }
        int edge = 0;
        for (std::size_t h = 0; h + 1 < hull.size(); ++h, ++edge) {
            long i1 = hull[h].first, i2 = hull[h + 1].first;
            double y1 = hull[h].second, y2 = hull[h + 1].second;
            long count = i2 - i1;
            double r = std::exp2(std::clamp((y1 - y2) / (double)count, -500.0, 500.0));
            r = std::min(r, 1.5 * radius);
            for (long t = 0; t < count; ++t) {
                double ang = 2.0 * pi * ((double)t / (double)count + 0.26 * edge) + 0.4;
                double jr = r * (1.0 + 0.05 * (((t + 13 * edge) * 2654435761u % 97) / 97.0 - 0.5));
                z.push_back(CL(std::polar((long double)jr, (long double)ang)));
            }
        }
        while ((long)z.size() < n)
            z.push_back(CL(std::polar((long double)(0.7 * radius),
                                      (long double)(2.0 * pi * (double)z.size() / (double)n))));
        z.resize((std::size_t)n);
    }

    rep.backward_errors.assign((std::size_t)n, 1e300);
    auto aberth_phase = [&]() {
    for (int iter = 0; iter < max_iter; ++iter) {
        // Gauss-Seidel sweep (updated positions feed the repulsion sums at
        // once), no freezing of converged points.  The stop condition is
        // step stagnation: a backward-error test against the coefficient
        // scale triggers long before clustered roots actually separate.
        long double max_rel_step = 0.0L;
        for (long i = 0; i < n; ++i) {
            CL zi = z[(std::size_t)i];
            CL fz = horner(c, zi);
            CL fpz = horner(d, zi);
            if (std::abs(fpz) < 1e-300L) {
                z[(std::size_t)i] += CL(1e-6L * radius, 1e-6L * radius);
                max_rel_step = 1.0L;
                continue;
            }
            CL w = fz / fpz;
            CL sum = 0.0L;
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                CL diff = zi - z[(std::size_t)j];
                if (std::abs(diff) < 1e-300L) diff = CL(1e-300L, 0);
                sum += 1.0L / diff;
            }
            CL denom = CL(1, 0) - w * sum;
            if (std::abs(denom) < 1e-300L) denom = CL(1e-300L, 0);
            CL step = w / denom;
            max_rel_step = std::max(max_rel_step,
                                    std::abs(step) / std::max((long double)1, std::abs(zi)));
            z[(std::size_t)i] = zi - step;
        }
        if (max_rel_step < 1e-18L) break;
    }
    };
    // exact-arithmetic Newton finish: integer Horner has no noise floor,
    // so the final step length is an honest root-distance estimate for
    // simple roots (the scale-relative backward error is not: it can read
    // 1e-15 at points far from any root when the coefficients are huge)
    std::vector<long double> step_rel((std::size_t)n, 1e300L);
    auto exact_finish = [&]() {
        for (long i = 0; i < n; ++i)
            z[(std::size_t)i] = refine_root(f, c, d,
                                            cplx((double)z[(std::size_t)i].real(),
                                                 (double)z[(std::size_t)i].imag()),
                                            &step_rel[(std::size_t)i]);
    };
    aberth_phase();
    exact_finish();
    // Exact-arithmetic Aberth sweeps: the integer Horner has no evaluation
    // noise, so clustered roots separate all the way down to the width of
    // their Newton basins.  The extended-precision phase above only has to
    // deliver a reasonable global configuration.
    IntPoly1 fprime = f.derivative();
    for (int sweep = 0; sweep < 60; ++sweep) {
        long double max_rel_step = 0.0L;
        for (long i = 0; i < n; ++i) {
            cplxl zi(z[(std::size_t)i].real(), z[(std::size_t)i].imag());
            cplxl w = newton_quotient_exact(f, fprime, zi);
            cplxl sum = 0.0L;
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                cplxl diff = zi - cplxl(z[(std::size_t)j].real(), z[(std::size_t)j].imag());
                if (std::abs(diff) < 1e-300L) diff = cplxl(1e-300L, 0);
                sum += 1.0L / diff;
            }
            cplxl denom = cplxl(1, 0) - w * sum;
            if (std::abs(denom) < 1e-300L) denom = cplxl(1e-300L, 0);
            cplxl step = w / denom;
            cplxl znew = zi - step;
            if (!std::isfinite((double)znew.real()) || !std::isfinite((double)znew.imag())) continue;
            max_rel_step =
                std::max(max_rel_step, std::abs(step) / std::max((long double)1, std::abs(znew)));
            z[(std::size_t)i] = CL(znew.real(), znew.imag());
        }
        if (max_rel_step < 1e-16L) break;
    }
    exact_finish();
    // Duplicate recovery: when two points have locked onto the same root,
    // some other root is uncovered nearby (within a few local separations).
    // Re-seed the extra point on rings around the doubled root, scaled by
    // the distance to its nearest settled neighbor, and let the Aberth
    // iteration with exact f/f' and repulsion from the settled points carry
    // it into an uncovered basin.
    long double near_tol = 1e-10L * std::max(1.0, radius);
    for (int round = 0; round < 6; ++round) {
        std::vector<bool> unresolved((std::size_t)n, false);
        bool have_work = false;
        for (long i = 0; i < n; ++i) {
            if (step_rel[(std::size_t)i] > 1e-13L) {
                unresolved[(std::size_t)i] = true;
                have_work = true;
            }
            for (long j = 0; j < i; ++j)
                if (!unresolved[(std::size_t)j] && !unresolved[(std::size_t)i] &&
                    std::abs(z[(std::size_t)i] - z[(std::size_t)j]) < near_tol) {
                    unresolved[(std::size_t)i] = true;
                    have_work = true;
                }
        }
        if (!have_work) break;
        for (long i = 0; i < n; ++i) {
            if (!unresolved[(std::size_t)i]) continue;
            CL home = z[(std::size_t)i];
            // local scale: nearest settled neighbor of the doubled position
            long double delta = (long double)radius;
            for (long j = 0; j < n; ++j)
                if (j != i && !unresolved[(std::size_t)j]) {
                    long double dist = std::abs(home - z[(std::size_t)j]);
                    if (dist > near_tol) delta = std::min(delta, dist);
                }
            bool recovered = false;
            for (int ring = 0; ring < 5 && !recovered; ++ring) {
                long double rr = delta * 0.5L * (long double)(1 << ring);
                for (int dir = 0; dir < 12 && !recovered; ++dir) {
                    long double ang = 2.0L * pi * (dir + 0.37L * ring) / 12.0L;
                    cplxl zi(home.real(), home.imag());
                    zi += std::polar(rr, ang);
                    long double last_step = 1e300L;
                    for (int it = 0; it < 160; ++it) {
                        cplxl w = newton_quotient_exact(f, fprime, zi);
                        cplxl sum = 0.0L;
                        for (long j = 0; j < n; ++j) {
                            if (j == i || unresolved[(std::size_t)j]) continue;
                            cplxl diff = zi - cplxl(z[(std::size_t)j].real(), z[(std::size_t)j].imag());
                            if (std::abs(diff) < 1e-300L) diff = cplxl(1e-300L, 0);
                            sum += 1.0L / diff;
                        }
                        cplxl denom = cplxl(1, 0) - w * sum;
                        if (std::abs(denom) < 1e-300L) denom = cplxl(1e-300L, 0);
                        cplxl step = w / denom;
                        zi -= step;
                        if (!std::isfinite((double)zi.real()) || !std::isfinite((double)zi.imag()))
                            break;
                        last_step = std::abs(step) / std::max((long double)1, std::abs(zi));
                        if (last_step < 1e-16L) break;
                    }
                    if (last_step >= 1e-13L) continue;
                    long double fin = 1e300L;
                    CL locked = refine_root(f, c, d, cplx((double)zi.real(), (double)zi.imag()), &fin);
                    if (fin > 1e-13L) continue;
                    bool occupied = false;
                    for (long j = 0; j < n; ++j)
                        if (j != i && !unresolved[(std::size_t)j] &&
                            std::abs(locked - z[(std::size_t)j]) < near_tol)
                            occupied = true;
                    if (occupied) continue;
                    z[(std::size_t)i] = locked;
                    step_rel[(std::size_t)i] = fin;
                    unresolved[(std::size_t)i] = false;
                    recovered = true;
                }
            }
        }
    }
    rep.roots.resize((std::size_t)n);
    for (long i = 0; i < n; ++i)
        rep.roots[(std::size_t)i] = cplx((double)z[(std::size_t)i].real(), (double)z[(std::size_t)i].imag());
    rep.all_converged = true;
    for (long i = 0; i < n; ++i) {
        CL fz = horner(c, z[(std::size_t)i]);
        rep.backward_errors[(std::size_t)i] = (double)(std::abs(fz) / coeff_scale(z[(std::size_t)i]));
        if (rep.backward_errors[(std::size_t)i] > backward_tol) rep.all_converged = false;
        if (step_rel[(std::size_t)i] > 1e-13L) rep.all_converged = false;
    }
    // near-coincident roots would contradict the simple-root expectation
    long double sep = 1e300L;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            sep = std::min(sep, std::abs(z[(std::size_t)i] - z[(std::size_t)j]));
    rep.multiplicity_anomaly = (n > 1 && sep < 1e-7L * std::max(1.0, radius));
    // Vieta: sum of roots = -c_{n-1}/c_n
    CL sum = 0.0L;
    for (const CL& r : z) sum += r;
    CL expect = (n >= 1 && c.size() >= 2) ? -c[c.size() - 2] / c.back() : CL(0, 0);
    long double scale = std::max((long double)1, std::abs(expect));
    rep.vieta_ok = std::abs(sum - expect) / scale < 1e-8L * std::max((long double)1, (long double)n);
    return rep;
}

namespace {

template <class C>
struct OrbitT {
    std::vector<C> z;   // z[0] = critical point
    std::string abort;  // "", "escaped" or "pole"
};

template <class C>
OrbitT<C> iterate_map_t(FamilyTag family, C param, C b, long D, long steps) {
    using R = typename C::value_type;
    OrbitT<C> orb;
    C z = (family == FamilyTag::quad_rational) ? C(1, 0) : C(0, 0);
    orb.z.push_back(z);
    R escape = (R)1e9;
    for (long s = 0; s < steps; ++s) {
        switch (family) {
            case FamilyTag::cubic_slice:
                z = z * z * z + param;
                break;
            case FamilyTag::unicritical: {
                C zp = C(1, 0);
                for (long i = 0; i < D; ++i) zp *= z;
                z = param * zp + C(1, 0);
                break;
            }
            case FamilyTag::quad_rational: {
                C den = C(1, 0) + (b - C(2, 0)) * z;
                if (std::abs(den) < (R)1e-14 * std::max((R)1, std::abs(z))) {
                    orb.abort = "pole";
                    return orb;
                }
                z = param * z * (b - z) / den;
                break;
            }
        }
        if (std::abs(z) > escape || !std::isfinite((double)z.real()) ||
            !std::isfinite((double)z.imag())) {
            orb.abort = "escaped";
            return orb;
        }
        orb.z.push_back(z);
    }
    return orb;
}

template <class C>
double orbit_dist_t(const OrbitT<C>& orb, long i, long j) {
    using R = typename C::value_type;
    R scale = std::max({(R)1, std::abs(orb.z[(std::size_t)i]), std::abs(orb.z[(std::size_t)j])});
    return (double)(std::abs(orb.z[(std::size_t)i] - orb.z[(std::size_t)j]) / scale);
}

template <class C>
DynamicsReport classify_orbit_t(FamilyTag family, C param, C b_or_unused, long D, long claimed_k,
                                long claimed_n, double tol, long max_steps) {
    if (tol < 1e-12 || tol > 1e-6) throw value_error("tolerance outside [1e-12, 1e-6] band");
    DynamicsReport rep;
    rep.family = family;
    rep.parameter = cplx((double)param.real(), (double)param.imag());
    rep.claimed_preperiod = claimed_k;
    rep.claimed_period = claimed_n;
    if (max_steps < claimed_k + claimed_n + 1)
        throw value_error("max_steps below the claimed preperiod + period");
    // The landing cycles are repelling, so float error grows with every step
    // past the landing; keep the window just wide enough for the checks.
    long need = claimed_k + 2 * claimed_n + 2;
    long steps = std::min(max_steps, need);
    OrbitT<C> orb = iterate_map_t(family, param, b_or_unused, D, steps);
    if (!orb.abort.empty()) {
        rep.verdict = orb.abort;
        return rep;
    }
    long horizon = (long)orb.z.size() - 1;
    long n_cap = std::max(claimed_n + 2, (long)4);
    // smallest preperiod, then smallest period, with a near-coincidence
    for (long kk = 0; kk <= horizon && rep.observed_preperiod < 0; ++kk)
        for (long nn = 1; nn <= n_cap && kk + nn <= horizon; ++nn)
            if (orbit_dist_t(orb, kk + nn, kk) <= tol) {
                rep.observed_preperiod = kk;
                rep.observed_period = nn;
                rep.residual = orbit_dist_t(orb, kk + nn, kk);
                break;
            }
    if (rep.observed_preperiod < 0) {
        rep.verdict = "no-coincidence";
        return rep;
    }
    if (rep.observed_preperiod >= 1)
        rep.earlier_margin = orbit_dist_t(orb, rep.observed_preperiod - 1 + rep.observed_period,
                                          rep.observed_preperiod - 1);
    bool exact = rep.observed_preperiod == 0 || rep.earlier_margin > 10.0 * tol;
    rep.verdict = (rep.observed_preperiod == claimed_k && rep.observed_period == claimed_n && exact)
                      ? "confirmed"
                      : "mismatch";
    return rep;
}

FamilyValidation validate_common(const IntPoly1& poly, FamilyTag family, cplx b, long D, long k,
                                 long n, double tol) {
    FamilyValidation out;
    RootReport roots = all_roots(poly);
    out.root_count_ok = (long)roots.roots.size() == poly.degree_or(0);
    out.roots_converged = roots.all_converged && !roots.multiplicity_anomaly && roots.vieta_ok;
    out.total = roots.roots.size();
    std::vector<cplxl> c = to_longdouble_coeffs(poly);
    std::vector<cplxl> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = (long double)i * c[i];
    for (const cplx& root : roots.roots) {
        cplxl refined = refine_root(poly, c, d, root);
        DynamicsReport rep =
            classify_orbit_t<cplxl>(family, refined, cplxl(b.real(), b.imag()), D, k, n, tol, 128);
        if (rep.confirmed()) ++out.confirmed;
        out.reports.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

DynamicsReport classify_orbit(FamilyTag family, cplx param, cplx b_or_unused, long D,
                              long claimed_k, long claimed_n, double tol, long max_steps) {
    return classify_orbit_t<cplx>(family, param, b_or_unused, D, claimed_k, claimed_n, tol,
                                  max_steps);
}

FamilyValidation validate_cubic_slice(const IntPoly1& s_k, long k, double tol) {
    return validate_common(s_k, FamilyTag::cubic_slice, cplx(0, 0), 3, k, 1, tol);
}

FamilyValidation validate_quad_slice(const IntPoly1& r_k, long k, double tol) {
    return validate_common(r_k, FamilyTag::quad_rational, cplx(2, 0), 2, k, 1, tol);
}

FamilyValidation validate_unicritical(const IntPoly1& r_knd, long D, long k, long n, long d,
                                      double tol) {
    FamilyValidation out = validate_common(r_knd, FamilyTag::unicritical, cplx(0, 0), D, k, n, tol);
    // the orbit enters its cycle through a primitive d-th root of unity on
    // the entry ratio z_{k+n-1} / z_{k-1}
    const long double pi = 3.14159265358979323846L;
    std::vector<cplxl> c = to_longdouble_coeffs(r_knd);
    std::vector<cplxl> dcoef(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dcoef[i - 1] = (long double)i * c[i];
    for (std::size_t ri = 0; ri < out.reports.size(); ++ri) {
        if (!out.reports[ri].confirmed()) continue;
        cplxl a = refine_root(r_knd, c, dcoef, out.reports[ri].parameter);
        OrbitT<cplxl> orb = iterate_map_t<cplxl>(FamilyTag::unicritical, a, cplxl(0, 0), D, k + n);
        if (!orb.abort.empty()) {
            out.omega_ok = false;
            continue;
        }
        cplxl lo = orb.z[(std::size_t)(k - 1)];
        cplxl hi = orb.z[(std::size_t)(k + n - 1)];
        if (std::abs(lo) < 1e-12L) {
            out.omega_ok = false;
            continue;
        }
        cplxl ratio = hi / lo;
        bool primitive = false;
        for (long j = 1; j < d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            cplxl omega = std::polar(1.0L, 2.0L * pi * (long double)j / (long double)d);
            if (std::abs(ratio - omega) < 1e-6L) primitive = true;
        }
        if (!primitive) out.omega_ok = false;
    }
    return out;
}

}  // namespace dynirr::oracle
