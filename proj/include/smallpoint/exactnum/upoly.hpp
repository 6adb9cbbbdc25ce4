#pragma once

// Dense univariate polynomials, lowest degree first. The zero polynomial is the
// empty vector. Generic routines work over any exact field type F that supports
// +, -, *, / and construction from an integer; integer-only helpers follow.

#include "smallpoint/exactnum/types.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace smallpoint {

template <class F> using UPoly = std::vector<F>;
using ZPoly = UPoly<Int>;
using QPoly = UPoly<Rat>;

template <class F> inline bool is_zero_coef(const F& a) { return a == 0; }

template <class F> void trim(UPoly<F>& p) {
    while (!p.empty() && is_zero_coef(p.back())) p.pop_back();
}

template <class F> inline int degree(const UPoly<F>& p) { return int(p.size()) - 1; }

template <class F> inline const F& lead(const UPoly<F>& p) { return p.back(); }

template <class F> UPoly<F> padd(const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r(std::max(a.size(), b.size()), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}

template <class F> UPoly<F> psub(const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r(std::max(a.size(), b.size()), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    trim(r);
    return r;
}

template <class F> UPoly<F> pneg(const UPoly<F>& a) {
    UPoly<F> r(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F(0) - a[i];
    return r;
}

template <class F> UPoly<F> pmul(const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<F> r(a.size() + b.size() - 1, F(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero_coef(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

template <class F> UPoly<F> pscale(const UPoly<F>& a, const F& c) {
    if (is_zero_coef(c)) return {};
    UPoly<F> r(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    trim(r);
    return r;
}

template <class F> UPoly<F> ppow(const UPoly<F>& a, unsigned e) {
    UPoly<F> r{F(1)}, b = a;
    while (e) {
        if (e & 1) r = pmul(r, b);
        e >>= 1;
        if (e) b = pmul(b, b);
    }
    return r;
}

/* Quotient and remainder over a field. */
template <class F> std::pair<UPoly<F>, UPoly<F>> pdivrem(const UPoly<F>& a, const UPoly<F>& b) {
    if (b.empty()) throw input_error("polynomial division by zero");
    UPoly<F> r = a, q;
    if (r.size() < b.size()) return {q, r};
    q.assign(r.size() - b.size() + 1, F(0));
    F inv = F(1) / lead(b);
    for (int k = int(r.size()) - int(b.size()); k >= 0; --k) {
        F c = r[k + b.size() - 1] * inv;
        q[k] = c;
        if (is_zero_coef(c)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = r[k + j] - c * b[j];
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
}

template <class F> UPoly<F> prem(const UPoly<F>& a, const UPoly<F>& b) { return pdivrem(a, b).second; }

template <class F> UPoly<F> pquo(const UPoly<F>& a, const UPoly<F>& b) { return pdivrem(a, b).first; }

template <class F> UPoly<F> pmonic(const UPoly<F>& a) {
    if (a.empty()) return a;
    F inv = F(1) / lead(a);
    return pscale(a, inv);
}

/* Monic gcd over a field; gcd(0, 0) = 0. */
template <class F> UPoly<F> pgcd(UPoly<F> a, UPoly<F> b) {
    while (!b.empty()) {
        UPoly<F> r = prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a);
}

/* Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic. */
template <class F> void pxgcd(const UPoly<F>& a, const UPoly<F>& b, UPoly<F>& g, UPoly<F>& s, UPoly<F>& t) {
    UPoly<F> r0 = a, r1 = b, s0{F(1)}, s1, t0, t1{F(1)};
    while (!r1.empty()) {
        auto [q, r] = pdivrem(r0, r1);
        UPoly<F> s2 = psub(s0, pmul(q, s1)), t2 = psub(t0, pmul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) { g = {}; s = {}; t = {}; return; }
    F inv = F(1) / lead(r0);
    g = pscale(r0, inv);
    s = pscale(s0, inv);
    t = pscale(t0, inv);
}

template <class F> UPoly<F> pderiv(const UPoly<F>& a) {
    if (a.size() <= 1) return {};
    UPoly<F> r(a.size() - 1, F(0));
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * F(long(i));
    trim(r);
    return r;
}

template <class F, class X> X peval(const UPoly<F>& a, const X& x) {
    X r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + X(a[i]);
    return r;
}

/* p(x + c) */
template <class F> UPoly<F> ptaylor_shift(const UPoly<F>& a, const F& c) {
    UPoly<F> r = a;
    int n = int(r.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) r[j] = r[j] + c * r[j + 1];
    trim(r);
    return r;
}

/* p(c * x) */
template <class F> UPoly<F> pscale_var(const UPoly<F>& a, const F& c) {
    UPoly<F> r = a;
    F pw(1);
    for (auto& x : r) { x = x * pw; pw = pw * c; }
    trim(r);
    return r;
}

/* x^deg * p(1/x) with deg = degree(p) */
template <class F> UPoly<F> preverse(const UPoly<F>& a) {
    UPoly<F> r(a.rbegin(), a.rend());
    trim(r);
    return r;
}

/* Squarefree part over a field of characteristic zero. */
template <class F> UPoly<F> psquarefree(const UPoly<F>& a) {
    if (a.size() <= 1) return a;
    return pquo(a, pgcd(a, pderiv(a)));
}

template <class F> F ppow_coef(const F& a, int e) {
    F r(1), b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/*
 * Padded resultant Res_{d,e}(u, v): the determinant of the (d+e) x (d+e)
 * Sylvester matrix of u read as a degree-d polynomial and v as a degree-e
 * polynomial. Computed by Euclid's algorithm plus the padding identities.
 */
template <class F> F resultant_padded(const UPoly<F>& u, const UPoly<F>& v, int d, int e) {
    int du = degree(u), dv = degree(v);
    if (du > d || dv > e) throw input_error("resultant: degree exceeds declared bound");
    if (d == 0 && e == 0) return F(1);
    if (d == 0) return u.empty() ? F(0) : F(1) * ppow_coef(u[0], e);
    if (e == 0) return v.empty() ? F(0) : F(1) * ppow_coef(v[0], d);
    if (du < d && dv < e) return F(0);
    if (du < d) {
        // expand along the leading column of v's block
        F r = resultant_padded(u, v, d - 1, e) * v[e];
        return (e % 2) ? F(0) - r : r;
    }
    if (dv < e) {
        if (v.empty()) return F(0);
        return ppow_coef(u[d], e - dv) * resultant_padded(u, v, d, dv);
    }
    // both exact
    if (d < e) {
        F r = resultant_padded(v, u, e, d);
        return ((long(d) * e) % 2) ? F(0) - r : r;
    }
    // d >= e >= 1: Res(u, v) = (-1)^{de} * lc(v)^{d - deg r} * Res(v, r), r = u mod v
    UPoly<F> r = prem(u, v);
    F sign = ((long(d) * e) % 2) ? F(-1) : F(1);
    if (r.empty()) return F(0);
    int dr = degree(r);
    return sign * ppow_coef(v[e], d - dr) * resultant_padded(v, r, e, dr);
}

template <class F> F resultant(const UPoly<F>& u, const UPoly<F>& v) {
    if (u.empty() || v.empty()) return F(0);
    return resultant_padded(u, v, degree(u), degree(v));
}

/* Newton interpolation through (xs[i], ys[i]) with distinct integer nodes. */
template <class F> UPoly<F> interpolate(const std::vector<long>& xs, const std::vector<F>& ys) {
    std::size_t n = xs.size();
    std::vector<F> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / F(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly<F> r;
    for (std::size_t k = n; k-- > 0;) {
        // r = r * (x - xs[k]) + dd[k]
        UPoly<F> nr(r.size() + 1, F(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            nr[i + 1] = nr[i + 1] + r[i];
            nr[i] = nr[i] - r[i] * F(xs[k]);
        }
        nr[0] = nr[0] + dd[k];
        r = std::move(nr);
        trim(r);
    }
    return r;
}

/* Determinant of the padded Sylvester matrix by Gaussian elimination (independent route). */
template <class F> F sylvester_determinant(const UPoly<F>& u, const UPoly<F>& v, int d, int e) {
    int n = d + e;
    if (n == 0) return F(1);
    std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
    auto coef = [](const UPoly<F>& p, int i) { return i < int(p.size()) ? p[i] : F(0); };
    for (int r = 0; r < e; ++r)
        for (int k = 0; k <= d; ++k) m[r][r + k] = coef(u, d - k);
    for (int r = 0; r < d; ++r)
        for (int k = 0; k <= e; ++k) m[e + r][r + k] = coef(v, e - k);
    F det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero_coef(m[r][c])) { piv = r; break; }
        if (piv < 0) return F(0);
        if (piv != c) { std::swap(m[piv], m[c]); det = F(0) - det; }
        det = det * m[c][c];
        F inv = F(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (is_zero_coef(m[r][c])) continue;
            F f = m[r][c] * inv;
            for (int k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// integer polynomials

ZPoly to_zpoly_primitive(const QPoly& p); // clears denominators, divides by content, positive lead
QPoly to_qpoly(const ZPoly& p);
Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p); // positive leading coefficient
ZPoly zmul(const ZPoly& a, const ZPoly& b);
/* exact division over Z; throws if b does not divide a */
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b);
/* true and quotient when b divides a over Z */
bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly* quotient = nullptr);
ZPoly zgcd(const ZPoly& a, const ZPoly& b); // primitive, positive lead
ZPoly zsquarefree(const ZPoly& p);          // primitive squarefree part
ZPoly zderiv(const ZPoly& p);

/* sign of p at a rational point */
int sign_at(const ZPoly& p, const Rat& x);
Rat eval_at(const ZPoly& p, const Rat& x);

/* Sturm sequence of a squarefree polynomial (each term primitive) */
std::vector<ZPoly> sturm_sequence(const ZPoly& p);
/* number of distinct real roots in (a, b]; a < b */
int sturm_count(const std::vector<ZPoly>& seq, const Rat& a, const Rat& b);
/* power of two strictly bounding the absolute value of every complex root */
Rat root_bound(const ZPoly& p);

std::string poly_to_string(const ZPoly& p, const std::string& var = "x");
std::string poly_to_string(const QPoly& p, const std::string& var = "x");

} // namespace smallpoint
