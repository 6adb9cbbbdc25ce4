#include "smallpoint/exactnum/ran.hpp"

#include "smallpoint/exactnum/factor.hpp"

#include <algorithm>
#include <sstream>

namespace smallpoint {

namespace {

Rat pow2(long e) {
    Int one = 1;
    if (e >= 0) {
        mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), e);
        return Rat(one);
    }
    mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), -e);
    Rat r(Int(1), one);
    return r;
}

/* isolating intervals of the real roots of an irreducible polynomial of degree >= 2 */
std::vector<DyadicInterval> isolate_irreducible(const ZPoly& f) {
    auto seq = sturm_sequence(f);
    Rat B = root_bound(f);
    std::vector<DyadicInterval> out;
    std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = sturm_count(seq, lo, hi);
        if (c == 0) continue;
        if (c == 1) { out.push_back(DyadicInterval::exact(lo, hi)); continue; }
        Rat mid = (lo + hi) / 2;
        stack.push_back({mid, hi});
        stack.push_back({lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
    return out;
}

ZPoly rational_minpoly(const Rat& q) { return ZPoly{Int(-q.get_num()), q.get_den()}; }

/* enclosure of a rational with width <= eps */
DyadicInterval rational_enclosure(const Rat& q, const Rat& eps) {
    if (is_dyadic(q)) return DyadicInterval::exact(q, q);
    long bits = 2;
    while (pow2(-bits) > eps / 2) bits *= 2;
    return DyadicInterval(q, bits + 2);
}

/* minimal-polynomial candidate of a op b from a resultant, by interpolation in x */
ZPoly composed_polynomial(const ZPoly& pa, const ZPoly& pb, ArithOp op) {
    int da = degree(pa), db = degree(pb);
    int N = da * db;
    QPoly qb = to_qpoly(pb);
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (long x0 = 0; x0 <= N; ++x0) {
        QPoly G;
        if (op == ArithOp::add) {
            G = pscale_var(ptaylor_shift(to_qpoly(pa), Rat(x0)), Rat(-1));
        } else if (op == ArithOp::sub) {
            G = ptaylor_shift(to_qpoly(pa), Rat(x0));
        } else {
            G.assign(da + 1, Rat(0));
            Rat pw = 1;
            for (int i = 0; i <= da; ++i) {
                G[da - i] = Rat(pa[i]) * pw;
                pw *= x0;
            }
            trim(G);
        }
        xs.push_back(x0);
        ys.push_back(resultant_padded(qb, G, db, da));
    }
    return to_zpoly_primitive(interpolate(xs, ys));
}

DyadicInterval apply(const DyadicInterval& a, const DyadicInterval& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    return a;
}

std::vector<ZPoly> irreducible_factors(const ZPoly& p) {
    std::vector<ZPoly> out;
    for (auto& [f, m] : factor_over_q(p)) out.push_back(f);
    return out;
}

} // namespace

RAN select_root(const std::vector<ZPoly>& factors, const std::function<DyadicInterval(const Rat&)>& enclose) {
    std::vector<std::vector<ZPoly>> seqs;
    for (const auto& f : factors) seqs.push_back(degree(f) >= 2 ? sturm_sequence(f) : std::vector<ZPoly>{});
    Rat eps(1, 4);
    for (int round = 0; round < 64; ++round, eps /= 16) {
        DyadicInterval J = enclose(eps);
        int total = 0, which = -1;
        Rat rational_root;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const ZPoly& f = factors[k];
            if (degree(f) < 1) continue;
            if (degree(f) == 1) {
                Rat r(-f[0], f[1]);
                r.canonicalize();
                if (J.contains(r)) { ++total; which = int(k); rational_root = r; }
                continue;
            }
            // irreducible of degree >= 2: no rational roots, endpoints are safe
            int c = sturm_count(seqs[k], J.lo(), J.hi());
            if (c > 0) { total += c; which = int(k); }
        }
        if (total == 0) throw invariant_error("select_root: enclosure contains no candidate root");
        if (total > 1) continue;
        if (degree(factors[which]) == 1) return RAN(rational_root);
        return RAN::from_isolator(factors[which], J);
    }
    throw invariant_error("select_root: candidates not separated");
}

RAN RAN::from_isolator(const ZPoly& minpoly, const DyadicInterval& iso) {
    ZPoly p = primitive_part(minpoly);
    if (smallpoint::degree(p) < 1) throw input_error("from_isolator: constant polynomial");
    if (smallpoint::degree(p) == 1) {
        Rat r(-p[0], p[1]);
        r.canonicalize();
        if (!iso.contains(r)) throw input_error("from_isolator: root outside interval");
        return RAN(r);
    }
    int slo = sign_at(p, iso.lo()), shi = sign_at(p, iso.hi());
    if (slo == 0 || shi == 0 || slo == shi)
        throw input_error("from_isolator: interval does not isolate a simple root");
    if (sturm_count(sturm_sequence(p), iso.lo(), iso.hi()) != 1)
        throw input_error("from_isolator: interval holds more than one root");
    RAN r;
    r.q_.reset();
    r.minpoly_ = p;
    r.cache_ = std::make_shared<Cache>();
    r.cache_->iso = iso;
    r.cache_->sign_lo = slo;
    return r;
}

const Rat& RAN::rational() const {
    if (!q_) throw invariant_error("rational() on an irrational number");
    return *q_;
}

ZPoly RAN::minpoly() const { return q_ ? rational_minpoly(*q_) : minpoly_; }

DyadicInterval RAN::isolator() const {
    if (q_) return rational_enclosure(*q_, Rat(1, 1024));
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->iso;
}

DyadicInterval RAN::refine(const Rat& eps) const {
    if (sgn(eps) <= 0) throw input_error("refine: eps must be positive");
    if (q_) return rational_enclosure(*q_, eps);
    std::lock_guard<std::mutex> lk(cache_->mu);
    DyadicInterval& iso = cache_->iso;
    Rat lo = iso.lo(), hi = iso.hi();
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        int s = sign_at(minpoly_, mid);
        check_invariant(s != 0, "refine: irreducible minimal polynomial vanished at a rational");
        if (s == cache_->sign_lo) lo = mid;
        else hi = mid;
    }
    iso = DyadicInterval::exact(lo, hi);
    return iso;
}

int RAN::sign() const {
    if (q_) return sgn(*q_);
    DyadicInterval I = isolator();
    Rat eps = I.width();
    while (true) {
        if (I.lo() >= 0) return 1;
        if (I.hi() <= 0) return -1;
        eps /= 4;
        I = refine(eps);
    }
}

bool RAN::equals(const RAN& o) const {
    if (q_ || o.q_) return q_ && o.q_ && *q_ == *o.q_;
    if (minpoly_ != o.minpoly_) return false;
    DyadicInterval a = isolator(), b = o.isolator();
    Rat lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    if (lo > hi) return false;
    if (lo == hi) return false; // a dyadic point is never an irrational root
    return sturm_count(sturm_sequence(minpoly_), lo, hi) == 1;
}

int RAN::compare(const RAN& o) const {
    if (q_ && o.q_) return (*q_ < *o.q_) ? -1 : (*q_ > *o.q_ ? 1 : 0);
    if (equals(o)) return 0;
    // distinct values: shrinking enclosures eventually separate
    DyadicInterval a = isolator(), b = o.isolator();
    Rat eps = std::max(a.width(), b.width());
    while (true) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        eps /= 4;
        a = refine(eps);
        b = o.refine(eps);
    }
}

std::string RAN::to_string() const {
    if (q_) return smallpoint::to_string(*q_);
    DyadicInterval I = isolator();
    std::ostringstream os;
    os << "root(" << poly_to_string(minpoly_) << ", [" << smallpoint::to_string(I.lo()) << ", "
       << smallpoint::to_string(I.hi()) << "])";
    return os.str();
}

std::string RAN::to_decimal(int digits) const {
    if (q_) return smallpoint::to_decimal(*q_, digits);
    Rat eps = Rat(1, pow_int(Int(10), digits + 2));
    DyadicInterval I = refine(eps);
    return smallpoint::to_decimal(I.mid(), digits);
}

RAN operator-(const RAN& a) { return ran_arith(RAN(0), a, ArithOp::sub); }
RAN operator+(const RAN& a, const RAN& b) { return ran_arith(a, b, ArithOp::add); }
RAN operator-(const RAN& a, const RAN& b) { return ran_arith(a, b, ArithOp::sub); }
RAN operator*(const RAN& a, const RAN& b) { return ran_arith(a, b, ArithOp::mul); }
RAN operator/(const RAN& a, const RAN& b) { return ran_arith(a, b, ArithOp::div); }

std::vector<RAN> isolate_real_roots(const QPoly& p) {
    if (p.empty()) throw input_error("zero polynomial has no root set");
    return isolate_real_roots(to_zpoly_primitive(p));
}

std::vector<RAN> isolate_real_roots(const ZPoly& p0) {
    ZPoly p = p0;
    trim(p);
    if (p.empty()) throw input_error("zero polynomial has no root set");
    if (degree(p) < 1) return {};
    std::vector<RAN> roots;
    for (const auto& f : irreducible_factors(p)) {
        if (degree(f) == 1) {
            Rat r(-f[0], f[1]);
            r.canonicalize();
            roots.emplace_back(r);
            continue;
        }
        for (const auto& I : isolate_irreducible(f)) roots.push_back(RAN::from_isolator(f, I));
    }
    // make isolators of different factors disjoint
    auto lo_of = [](const RAN& r) { return r.is_rational() ? r.rational() : r.isolator().lo(); };
    auto hi_of = [](const RAN& r) { return r.is_rational() ? r.rational() : r.isolator().hi(); };
    while (true) {
        std::sort(roots.begin(), roots.end(), [&](const RAN& a, const RAN& b) { return lo_of(a) < lo_of(b); });
        bool clash = false;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            if (hi_of(roots[i]) >= lo_of(roots[i + 1])) {
                clash = true;
                for (std::size_t k : {i, i + 1}) {
                    if (roots[k].is_rational()) continue;
                    roots[k].refine(roots[k].isolator().width() / 2);
                }
            }
        }
        if (!clash) break;
    }
    return roots;
}

RAN ran_arith(const RAN& a, const RAN& b, ArithOp op) {
    if (op == ArithOp::div && b.is_zero()) throw input_error("division by zero");
    if (a.is_rational() && b.is_rational()) {
        const Rat &x = a.rational(), &y = b.rational();
        switch (op) {
        case ArithOp::add: return RAN(Rat(x + y));
        case ArithOp::sub: return RAN(Rat(x - y));
        case ArithOp::mul: return RAN(Rat(x * y));
        case ArithOp::div: return RAN(Rat(x / y));
        }
    }
    if (op == ArithOp::div) {
        // a / b = a * (1/b)
        RAN inv_b;
        if (b.is_rational()) {
            inv_b = RAN(Rat(1 / b.rational()));
        } else {
            int s = b.sign();
            ZPoly rp = primitive_part(preverse(b.minpoly()));
            inv_b = select_root({rp}, [&](const Rat& eps) {
                // refine b away from zero, then invert
                Rat e = eps;
                while (true) {
                    DyadicInterval I = b.refine(e);
                    if ((s > 0 && I.lo() > 0) || (s < 0 && I.hi() < 0)) {
                        DyadicInterval J = DyadicInterval(1) / I;
                        if (J.width() <= eps || e < Rat(1, Int(1) << 2048)) return J;
                    }
                    e /= 4;
                }
            });
        }
        return ran_arith(a, inv_b, ArithOp::mul);
    }
    if (a.is_zero() || b.is_zero()) {
        if (op == ArithOp::mul) return RAN(0);
        if (op == ArithOp::add) return a.is_zero() ? b : a;
        if (b.is_zero()) return a; // a - 0
    }
    if (op == ArithOp::mul && b.is_rational() && b.rational() == 1) return a;
    if (op == ArithOp::mul && a.is_rational() && a.rational() == 1) return b;

    std::vector<ZPoly> cands;
    if (a.is_rational() || b.is_rational()) {
        // one operand rational: transform the other minimal polynomial directly
        bool left_rational = a.is_rational();
        const RAN& alg = left_rational ? b : a;
        Rat q = left_rational ? a.rational() : b.rational();
        QPoly m = to_qpoly(alg.minpoly());
        QPoly t;
        if (op == ArithOp::add) t = ptaylor_shift(m, Rat(-q));            // alg + q
        else if (op == ArithOp::sub && !left_rational) t = ptaylor_shift(m, q); // alg - q
        else if (op == ArithOp::sub) t = pscale_var(ptaylor_shift(m, q), Rat(-1)); // q - alg
        else t = pscale_var(m, Rat(1 / q));                               // alg * q
        cands = {to_zpoly_primitive(t)};
    } else {
        cands = irreducible_factors(composed_polynomial(a.minpoly(), b.minpoly(), op));
    }
    return select_root(cands, [&](const Rat& eps) {
        // operand widths chosen so the result width shrinks with eps
        Rat e = eps;
        Rat scale = 1;
        if (op == ArithOp::mul) {
            Rat ma = a.is_rational() ? abs_rat(a.rational()) : a.isolator().mag();
            Rat mb = b.is_rational() ? abs_rat(b.rational()) : b.isolator().mag();
            scale = ma + mb + 1;
        }
        e = eps / (4 * scale);
        DyadicInterval Ia = a.is_rational() ? rational_enclosure(a.rational(), e) : a.refine(e);
        DyadicInterval Ib = b.is_rational() ? rational_enclosure(b.rational(), e) : b.refine(e);
        return apply(Ia, Ib, op);
    });
}

int ran_sign(const RAN& a) { return a.sign(); }

DyadicInterval refine(const RAN& a, const Rat& eps) { return a.refine(eps); }

} // namespace smallpoint
