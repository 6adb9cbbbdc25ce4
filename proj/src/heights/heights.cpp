#include "smallpoint/heights/heights.hpp"

#include "smallpoint/exactnum/interval.hpp"
#include "smallpoint/exactnum/order.hpp"
#include "smallpoint/heights/complex_roots.hpp"

#include <algorithm>

namespace smallpoint {

namespace {

mpfr_prec_t bits_for(const Rat& tol) {
    long b = long(bit_length(ceil_rat(1 / tol)));
    return mpfr_prec_t(std::max<long>(128, 2 * b + 64));
}

HeightEnclosure exact_height(const Rat& h, const std::string& tag) {
    HeightEnclosure e;
    e.lower = e.upper = h;
    e.exact = true;
    e.exact_power_value = RAN(h);
    e.trace.push_back({tag, h});
    return e;
}

HeightEnclosure rational_point_height(const std::vector<Rat>& xs) {
    Int L = 1;
    for (const auto& x : xs) L = lcm_int(L, x.get_den());
    Int H = L;
    for (const auto& x : xs) H = std::max(H, abs_int(Rat(x * Rat(L)).get_num()));
    return exact_height(Rat(H), "rational-point-lcm-max");
}

// 2^t for rational t
Interval pow2(const Rat& t, mpfr_prec_t prec) {
    Int fl = floor_rat(t);
    Rat fr = t - Rat(fl);
    Interval r = (Interval(Rat(2), prec).log() * Interval(fr, prec)).exp();
    return r.mul_2exp(fl.get_si());
}

Rat valuation_part(const Int& n, const Int& p) {
    Int r = 1, m = abs_int(n);
    while (m != 0 && m % p == 0) {
        m /= p;
        r *= p;
    }
    return Rat(r);
}

} // namespace

HeightEnclosure height_rational(const Rat& q) {
    return exact_height(Rat(std::max(abs_int(q.get_num()), Int(q.get_den()))), "rational-closed-form");
}

RAN quadratic_mahler(const ZPoly& q0) {
    ZPoly q = q0;
    trim(q);
    if (degree(q) != 2) throw input_error("quadratic_mahler: degree must be 2");
    Int a2 = abs_int(q[2]);
    Int a1 = q[2] < 0 ? Int(-q[1]) : q[1];
    Int a0 = q[2] < 0 ? Int(-q[0]) : q[0];
    Int disc = a1 * a1 - 4 * a2 * a0;
    if (disc < 0) return RAN(std::max(a2, a0)); // |r1|^2 = |r2|^2 = a0/a2
    auto capped = [](const RAN& r) {
        RAN m = r.sign() < 0 ? -r : r;
        return m > RAN(1) ? m : RAN(1);
    };
    std::vector<RAN> roots;
    if (is_square(disc)) {
        Int s = isqrt(disc);
        for (int sg : {-1, 1}) {
            Rat r(-a1 + sg * s, 2 * a2);
            r.canonicalize();
            roots.push_back(RAN(r));
        }
    } else {
        roots = isolate_real_roots(ZPoly{a0, a1, a2});
    }
    check_invariant(roots.size() == 2, "quadratic_mahler: expected two roots");
    return RAN(a2) * capped(roots[0]) * capped(roots[1]);
}

HeightEnclosure mahler_measure(const ZPoly& p0, const Rat& tol) {
    if (tol <= 0) throw input_error("mahler_measure: tol must be positive");
    ZPoly p = p0;
    trim(p);
    if (p.empty()) throw input_error("mahler_measure: zero polynomial");
    std::size_t s = 0;
    while (p[s] == 0) ++s;
    p.erase(p.begin(), p.begin() + long(s));
    int d = degree(p);
    Int lead = abs_int(p[d]), c0 = abs_int(p[0]);
    if (d == 0) return exact_height(Rat(lead), "mahler-constant");

    // M >= max(|lead|, |p(0)|) and M <= ||p||_2
    Rat lo(std::max(lead, c0));
    Int n2 = 0;
    for (const auto& c : p) n2 += c * c;
    Rat hi(is_square(n2) ? isqrt(n2) : Int(isqrt(n2) + 1));
    HeightEnclosure e;
    e.trace.push_back({"mahler-coefficient-lower", lo});
    e.trace.push_back({"mahler-l2-upper", hi});
    int steps = 0;
    for (mpfr_prec_t prec = bits_for(tol); prec <= 8192 && hi - lo > tol * lo; prec *= 2) {
        std::vector<Interval> q;
        for (const auto& c : p) q.emplace_back(Rat(c), prec);
        Rat t = 0; // M(p) = 2^t * M(q)^(1/2^k)
        for (int k = 0; k <= 64; ++k) {
            Interval mx(Rat(0), prec), norm2(Rat(0), prec);
            double mx_width = 0;
            for (int i = 0; i <= d; ++i) {
                Interval a = q[i].abs();
                Interval b = a / Interval(Rat(binomial(d, i)), prec);
                if (mpfr_cmp(b.lo(), mx.lo()) > 0) mx_width = b.rel_width_d();
                mx = Interval::max(mx, b);
                norm2 = norm2 + a.sqr();
            }
            Interval lo_k = mx, hi_k = norm2.sqrt();
            for (int j = 0; j < k; ++j) {
                lo_k = lo_k.sqrt();
                hi_k = hi_k.sqrt();
            }
            Interval sc = pow2(t, prec);
            lo = std::max(lo, (lo_k * sc).lo_rat());
            hi = std::min(hi, (hi_k * sc).hi_rat());
            steps = std::max(steps, k);
            if (hi - lo <= tol * lo) break;
            if (mx_width > 1e-6) break; // precision exhausted
            // q(x^2) = q(x) q(-x) up to sign
            std::vector<Interval> c;
            for (int j = 0; j <= d; ++j) {
                Interval acc = q[j].sqr();
                if (j % 2) acc = -acc;
                for (int i = std::max(0, 2 * j - d); i < j; ++i) {
                    Interval term = (q[i] * q[2 * j - i]).mul_2exp(1);
                    acc = (i % 2) ? acc - term : acc + term;
                }
                c.push_back(acc);
            }
            long ex = 0;
            for (const auto& x : c) ex = std::max(ex, x.mag_exponent());
            for (auto& x : c) x = x.mul_2exp(-ex);
            q = std::move(c);
            Int den = 1;
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), unsigned(k + 1));
            t += Rat(Int(ex), den);
            t.canonicalize();
        }
    }
    e.lower = lo;
    e.upper = hi;
    e.exact = lo == hi;
    e.trace.push_back({"graeffe-steps", Rat(steps)});
    return e;
}

HeightEnclosure height_algebraic(const RAN& a, const Rat& tol) {
    if (tol <= 0) throw input_error("height_algebraic: tol must be positive");
    if (a.is_rational()) return height_rational(a.rational());
    ZPoly m = a.minpoly();
    int d = degree(m);
    HeightEnclosure e;
    if (d == 2) {
        RAN M = quadratic_mahler(m);
        e.exact_power_value = M;
        e.exact_power = 2;
        if (M.is_rational() && is_square(M.rational().get_num()) && is_square(M.rational().get_den())) {
            HeightEnclosure r = exact_height(Rat(isqrt(M.rational().get_num()), isqrt(M.rational().get_den())),
                                             "quadratic-mahler-closed-form");
            r.exact_power_value = M;
            r.exact_power = 2;
            return r;
        }
        mpfr_prec_t prec = bits_for(tol);
        Rat eps = tol / 16;
        for (int round = 0; round < 64; ++round) {
            DyadicInterval I = M.refine(eps);
            Interval h = Interval(I.lo(), I.hi(), prec).sqrt();
            e.lower = std::max(Rat(1), h.lo_rat());
            e.upper = h.hi_rat();
            if (e.upper - e.lower <= tol * e.lower) break;
            eps /= 256;
            prec *= 2;
        }
        e.trace.push_back({"quadratic-mahler-closed-form", e.upper});
        return e;
    }
    HeightEnclosure M = mahler_measure(m, tol / 2);
    Interval h = Interval(M.lower, M.upper, bits_for(tol)).root(unsigned(d));
    e.lower = std::max(Rat(1), h.lo_rat());
    e.upper = h.hi_rat();
    e.trace = M.trace;
    e.trace.push_back({"mahler-root-degree", Rat(d)});
    return e;
}

HeightEnclosure height_point(const FieldPtr& k, const std::vector<NFElem>& p, const Rat& tol) {
    if (tol <= 0) throw input_error("height_point: tol must be positive");
    bool all_rat = true;
    for (const auto& x : p) all_rat = all_rat && x.is_rational();
    if (all_rat || !k) {
        std::vector<Rat> q;
        for (const auto& x : p) q.push_back(x.rational());
        return rational_point_height(q);
    }
    const ZPoly& m = k->m;
    int d = k->degree();
    auto padded = [d](const NFElem& x) {
        QVec v = x.rep();
        v.resize(std::size_t(d), Rat(0));
        return v;
    };

    // finite places: p-part of [O_p + sum x_i O_p : O_p]
    Int den = 1;
    for (const auto& x : p)
        for (const auto& c : x.rep()) den = lcm_int(den, c.get_den());
    Rat finite = 1;
    if (den > 1) {
        for (const auto& [prime, ex] : factor_integer(den)) {
            QMat Op = p_maximal_order(m, qidentity(std::size_t(d)), prime);
            QMat gens = Op;
            for (const auto& x : p) {
                QVec xv = padded(x);
                for (const auto& w : Op) gens.push_back(nf_mul(m, xv, w));
            }
            Rat idx = lattice_volume(Op) / lattice_volume(lattice_hnf(gens));
            check_invariant(idx.get_den() == 1, "height_point: lattice index is not an integer");
            finite *= valuation_part(idx.get_num(), prime);
        }
    }

    HeightEnclosure e;
    e.trace.push_back({"finite-places", finite});
    for (mpfr_prec_t prec = bits_for(tol); prec <= 16384; prec *= 2) {
        auto roots = complex_roots(m, prec);
        Interval prod(Rat(1), prec);
        for (const auto& r : roots) {
            Interval mx(Rat(1), prec);
            for (const auto& x : p) mx = Interval::max(mx, eval_complex(x.rep(), r.box).abs());
            prod = prod * mx;
        }
        Interval h = (prod * Interval(finite, prec)).root(unsigned(d));
        e.lower = std::max(Rat(1), h.lo_rat());
        e.upper = h.hi_rat();
        if (e.upper - e.lower <= tol * e.lower) {
            e.trace.push_back({"archimedean-places-upper", prod.hi_rat()});
            break;
        }
    }
    e.trace.push_back({"common-field-degree", Rat(d)});
    return e;
}

HeightEnclosure height_point(const std::vector<RAN>& p, const Rat& tol, int max_field_degree) {
    if (tol <= 0) throw input_error("height_point: tol must be positive");
    std::vector<Rat> rats;
    std::size_t nonzero = 0;
    const RAN* single = nullptr;
    for (const auto& x : p) {
        if (!x.is_zero()) {
            ++nonzero;
            single = &x;
        }
        if (x.is_rational()) rats.push_back(x.rational());
    }
    if (rats.size() == p.size()) return rational_point_height(rats);
    if (nonzero == 1) return height_algebraic(*single, tol);

    try {
        auto [k, elems] = common_field(p, max_field_degree);
        return height_point(k, elems, tol);
    } catch (const budget_exhausted&) {
        // no common field within the cap: certified product bound
        HeightEnclosure e;
        e.upper = 1;
        for (const auto& x : p) {
            HeightEnclosure h = height_algebraic(x, tol);
            e.lower = std::max(e.lower, h.lower);
            e.upper *= h.upper;
        }
        e.trace.push_back({"product-of-coordinate-heights", e.upper});
        return e;
    }
}

HeightEnclosure height_poly_rational(const QPolyN& f) {
    if (f.is_zero()) throw input_error("height_poly_rational: zero polynomial");
    Int h = 0;
    for (const auto& [m, c] : primitive_integer_form(f).terms()) h = std::max(h, abs_int(c.get_num()));
    return exact_height(Rat(h), "primitive-coefficient-max");
}

HeightEnclosure height_poly_rational(const QPoly& f) {
    QPoly g = f;
    trim(g);
    if (g.empty()) throw input_error("height_poly_rational: zero polynomial");
    Int h = 0;
    for (const auto& c : to_zpoly_primitive(g)) h = std::max(h, abs_int(c));
    return exact_height(Rat(h), "primitive-coefficient-max");
}

Rat root_height_bound(const QPoly& f0) {
    QPoly f = f0;
    trim(f);
    if (degree(f) < 1) throw input_error("root_height_bound: degree must be at least 1");
    if (lead(f) != 1) throw input_error("root_height_bound: polynomial is not monic");
    return Rat(degree(f)) * height_poly_rational(f).upper;
}

Rat root_height_bound(const UPoly<RAN>& f0, const Rat& tol) {
    UPoly<RAN> f = f0;
    trim(f);
    if (degree(f) < 1) throw input_error("root_height_bound: degree must be at least 1");
    if (lead(f) != RAN(1)) throw input_error("root_height_bound: polynomial is not monic");
    bool rat = true;
    for (const auto& c : f) rat = rat && c.is_rational();
    if (rat) {
        QPoly q;
        for (const auto& c : f) q.push_back(c.rational());
        return root_height_bound(q);
    }
    std::vector<RAN> coefs(f.begin(), f.end() - 1);
    return Rat(degree(f)) * height_point(coefs, tol).upper;
}

} // namespace smallpoint
