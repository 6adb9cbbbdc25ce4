#include "smallpoint/heights/complex_roots.hpp"

#include <cmath>
#include <complex>

namespace smallpoint {

namespace {

using CLD = std::complex<long double>;

std::vector<CLD> aberth_long_double(const ZPoly& p) {
    int d = degree(p);
    std::vector<long double> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(mpz_get_d(p[i].get_mpz_t()));
    // Cauchy radius for the starting circle
    long double R = 0;
    for (int i = 0; i < d; ++i) R = std::max(R, std::abs(c[i] / c[d]));
    R = std::min<long double>(1 + R, 1e30L);
    std::vector<CLD> z(d);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int k = 0; k < d; ++k) z[k] = std::polar(R, 2 * pi * k / d + 0.4L);
    for (int it = 0; it < 800; ++it) {
        long double worst = 0;
        for (int k = 0; k < d; ++k) {
            CLD f = c[d], df = 0;
            for (int i = d - 1; i >= 0; --i) {
                df = df * z[k] + f;
                f = f * z[k] + c[i];
            }
            if (f == CLD(0)) continue;
            CLD ratio = f / df, s = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += CLD(1) / (z[k] - z[j]);
            CLD w = ratio / (CLD(1) - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

CInterval point(const CInterval& z) { return {z.re.midpoint(), z.im.midpoint()}; }

CInterval eval_z(const ZPoly& p, const CInterval& z, mpfr_prec_t prec) {
    CInterval acc(prec);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + CInterval(Interval(Rat(p[i]), prec), Interval(prec));
    return acc;
}

// one Aberth sweep in floating point; returns the largest relative correction as a double
double aberth_sweep(const ZPoly& p, const ZPoly& dp, std::vector<CInterval>& z, mpfr_prec_t prec) {
    std::size_t d = z.size();
    double worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
        try {
            CInterval f = point(eval_z(p, z[k], prec));
            if (f.re.hi_d() == 0 && f.re.lo_d() == 0 && f.im.hi_d() == 0 && f.im.lo_d() == 0) continue;
            CInterval df = point(eval_z(dp, z[k], prec));
            CInterval ratio = point(f / df);
            CInterval s(prec);
            CInterval one(Interval(Rat(1), prec), Interval(prec));
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) s = point(s + point(one / point(z[k] - z[j])));
            CInterval w = point(ratio / point(one - point(ratio * s)));
            z[k] = point(z[k] - w);
            double wm = std::hypot(w.re.hi_d(), w.im.hi_d());
            double zm = std::max(1.0, std::hypot(z[k].re.hi_d(), z[k].im.hi_d()));
            worst = std::max(worst, wm / zm);
        } catch (const invariant_error&) {
            // a divisor collapsed to zero; nudge the iterate
            z[k] = point(z[k] + CInterval(Interval(Rat(1, 1 << 20), prec), Interval(Rat(1, 1 << 21), prec)));
            worst = 1;
        }
    }
    return worst;
}

} // namespace

CInterval eval_complex(const QPoly& f, const CInterval& z) {
    mpfr_prec_t prec = z.re.prec();
    CInterval acc(prec);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + CInterval(Interval(f[i], prec), Interval(prec));
    return acc;
}

std::optional<std::vector<RootBox>> certified_complex_roots(const ZPoly& p0, mpfr_prec_t prec) {
    ZPoly p = p0;
    trim(p);
    int d = degree(p);
    if (d < 1) return std::vector<RootBox>{};
    if (d == 1) {
        Rat r(-p[0], p[1]);
        r.canonicalize();
        CInterval z(Interval(r, prec), Interval(prec));
        Interval rad(Rat(0), prec);
        return std::vector<RootBox>{{z, rad}};
    }
    std::vector<CInterval> z;
    for (const auto& c : aberth_long_double(p))
        z.push_back(CInterval(Interval(Rat(double(c.real())), prec), Interval(Rat(double(c.imag())), prec)));
    ZPoly dp = zderiv(p);
    double target = std::ldexp(1.0, -int(prec) + 16);
    for (int it = 0; it < 200; ++it)
        if (aberth_sweep(p, dp, z, prec) < target) break;

    std::vector<Interval> radius;
    Interval lead(Rat(p[d]), prec);
    for (int j = 0; j < d; ++j) {
        CInterval den(lead, Interval(prec));
        for (int k = 0; k < d; ++k)
            if (k != j) den = den * (z[j] - z[k]);
        if (den.abs2().contains_zero()) return std::nullopt;
        CInterval w = eval_z(p, z[j], prec) / den;
        Interval r = w.abs() * Interval(Rat(d), prec);
        radius.push_back(Interval(Rat(0), r.hi_rat(), prec));
    }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Interval gap = (z[j] - z[k]).abs();
            Interval need = radius[j] + radius[k];
            if (mpfr_cmp(gap.lo(), need.hi()) <= 0) return std::nullopt;
        }
    std::vector<RootBox> out;
    for (int j = 0; j < d; ++j) {
        Rat r = radius[j].hi_rat();
        Rat re = z[j].re.lo_rat(), im = z[j].im.lo_rat();
        out.push_back({CInterval(Interval(re - r, re + r, prec), Interval(im - r, im + r, prec)), radius[j]});
    }
    return out;
}

std::vector<RootBox> complex_roots(const ZPoly& p, mpfr_prec_t min_prec, mpfr_prec_t max_prec) {
    for (mpfr_prec_t prec = min_prec; prec <= max_prec; prec *= 2)
        if (auto r = certified_complex_roots(p, prec)) return *r;
    throw budget_exhausted("complex root certification did not converge");
}

} // namespace smallpoint
