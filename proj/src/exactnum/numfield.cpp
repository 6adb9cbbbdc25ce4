#include "smallpoint/exactnum/numfield.hpp"

#include "smallpoint/exactnum/factor.hpp"

namespace smallpoint {

namespace {

const FieldPtr& common(const NFElem& a, const NFElem& b) {
    if (!a.field()) return b.field();
    if (!b.field() || a.field() == b.field()) return a.field();
    if (a.is_rational()) return b.field();
    if (b.is_rational()) return a.field();
    throw invariant_error("NFElem: elements of different fields");
}

DyadicInterval horner(const QPoly& v, const DyadicInterval& x) {
    DyadicInterval acc(0);
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * x + DyadicInterval(v[i]);
    return acc;
}

/* p(c0 + c1*y) as a polynomial in y over the field */
UPoly<NFElem> compose_linear(const ZPoly& p, const NFElem& c0, const NFElem& c1) {
    UPoly<NFElem> lin{c0, c1}, acc;
    trim(lin);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = pmul(acc, lin);
        acc = padd(acc, UPoly<NFElem>{NFElem(p[i])});
        trim(acc);
    }
    return acc;
}

} // namespace

FieldPtr make_field(const ZPoly& m, std::optional<RAN> root) {
    if (degree(m) < 2 || lead(m) != 1) throw invariant_error("make_field: need a monic polynomial of degree >= 2");
    auto f = std::make_shared<NumberFieldCtx>();
    f->m = m;
    f->mq = to_qpoly(m);
    f->root = std::move(root);
    return f;
}

NFElem::NFElem(FieldPtr f, QPoly rep) : f_(std::move(f)), v_(std::move(rep)) {
    trim(v_);
    if (f_ && int(v_.size()) > f_->degree()) v_ = prem(v_, f_->mq);
}

Rat NFElem::rational() const {
    if (!is_rational()) throw invariant_error("NFElem: not rational");
    return v_.empty() ? Rat(0) : v_[0];
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    const FieldPtr& f = common(a, b);
    NFElem r;
    r.f_ = f;
    r.v_ = padd(a.v_, b.v_);
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    const FieldPtr& f = common(a, b);
    NFElem r;
    r.f_ = f;
    r.v_ = psub(a.v_, b.v_);
    return r;
}

NFElem operator-(const NFElem& a) {
    NFElem r = a;
    r.v_ = pneg(a.v_);
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    const FieldPtr& f = common(a, b);
    return NFElem(f, pmul(a.v_, b.v_));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (is_rational()) {
        NFElem r = *this;
        r.v_[0] = 1 / v_[0];
        return r;
    }
    QPoly g, s, t;
    pxgcd(v_, f_->mq, g, s, t);
    check_invariant(g.size() == 1, "NFElem: defining polynomial is not irreducible");
    return NFElem(f_, s);
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool operator==(const NFElem& a, const NFElem& b) {
    if (a.v_ != b.v_) return false;
    if (a.is_rational()) return true;
    return a.f_ == b.f_;
}

QPoly NFElem::charpoly() const {
    int d = field_degree(f_);
    if (is_rational()) {
        QPoly lin{-rational(), Rat(1)};
        return ppow(lin, unsigned(d));
    }
    // Res_y(m(y), x - v(y)) = prod over conjugates of (x - v(theta_i)) since m is monic
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (long t = 0; t <= d; ++t) {
        QPoly w = pneg(v_);
        w = padd(w, QPoly{Rat(t)});
        trim(w);
        xs.push_back(t);
        ys.push_back(resultant_padded(f_->mq, w, d, degree(v_)));
    }
    return interpolate(xs, ys);
}

DyadicInterval NFElem::enclose(const Rat& eps) const {
    if (is_rational()) {
        long bits = std::max<long>(DyadicInterval::default_prec,
                                   long(bit_length(eps.get_den())) - long(bit_length(eps.get_num())) + 4);
        return DyadicInterval(rational(), bits);
    }
    if (!f_->root) throw invariant_error("NFElem: field has no real embedding");
    Rat e = eps;
    for (int round = 0; round < 400; ++round) {
        DyadicInterval I = horner(v_, f_->root->refine(e));
        if (I.width() <= eps) return I;
        e /= 16;
    }
    throw invariant_error("NFElem: enclosure failed to converge");
}

RAN NFElem::to_ran() const {
    if (is_rational()) return RAN(rational());
    ZPoly cp = to_zpoly_primitive(charpoly());
    auto facs = factor_squarefree(zsquarefree(cp));
    return select_root(facs, [this](const Rat& eps) { return enclose(eps); });
}

NFElem generator(const FieldPtr& f) {
    if (!f) throw invariant_error("generator: Q has no generator");
    return NFElem(f, QPoly{Rat(0), Rat(1)});
}

std::pair<FieldPtr, NFElem> field_of(const RAN& a) {
    if (a.is_rational()) return {nullptr, NFElem(a.rational())};
    ZPoly p = a.minpoly();
    int d = degree(p);
    Int c = lead(p);
    // gamma = c*a is an algebraic integer with minpoly c^{d-1} p(x/c)
    ZPoly m(p.size());
    for (int i = 0; i <= d; ++i) m[i] = (i == d) ? Int(1) : p[i] * pow_int(c, d - 1 - i);
    RAN gamma = a * RAN(Rat(c));
    FieldPtr f = make_field(m, gamma);
    return {f, NFElem(f, QPoly{Rat(0), Rat(1) / Rat(c)})};
}

NFElem embed(const NFElem& x, const NFElem& img) {
    if (!x.field() || x.is_rational()) return x.is_zero() ? NFElem() : NFElem(x.rep()[0]);
    NFElem acc;
    const QPoly& v = x.rep();
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * img + NFElem(v[i]);
    return acc;
}

FieldJoin join_fields(const FieldPtr& a, const FieldPtr& b, int max_degree) {
    if (!a && !b) return {nullptr, NFElem(), NFElem()};
    if (!a) return {b, NFElem(), generator(b)};
    if (!b || a == b) return {a, generator(a), b ? generator(a) : NFElem()};
    if (!a->root || !b->root) throw invariant_error("join_fields: both fields need a real embedding");
    int da = a->degree(), db = b->degree();
    const RAN &alpha = *a->root, &beta = *b->root;
    for (long step = 1; step <= 64; ++step) {
        long k = (step % 2) ? (step + 1) / 2 : -(step / 2);
        // R(x) = Res_y(ma(y), mb(x - k y)) is monic with roots beta_j + k alpha_i
        std::vector<long> xs;
        std::vector<Rat> ys;
        QPoly mbq = b->mq;
        for (long t = 0; t <= long(da) * db; ++t) {
            QPoly w = pscale_var(ptaylor_shift(mbq, Rat(t)), Rat(-k));
            xs.push_back(t);
            ys.push_back(resultant_padded(a->mq, w, da, db));
        }
        ZPoly R = to_zpoly_primitive(interpolate(xs, ys));
        if (degree(zgcd(R, zderiv(R))) > 0) continue;
        auto enc = [&](const Rat& eps) {
            Rat e = eps / (2 * (1 + std::abs(k)));
            return beta.refine(e) + DyadicInterval(Int(k)) * alpha.refine(e);
        };
        RAN delta = select_root(factor_squarefree(R), enc);
        ZPoly p = delta.minpoly();
        if (degree(p) > max_degree) throw budget_exhausted("join_fields: compositum degree exceeds the cap");
        check_invariant(degree(p) >= 2 && lead(p) == 1, "join_fields: primitive element is not an algebraic integer");
        FieldPtr c = make_field(p, delta);
        NFElem de = generator(c);
        UPoly<NFElem> g1 = to_nf_poly(a->mq);
        UPoly<NFElem> g2 = compose_linear(b->m, de, NFElem(-k));
        UPoly<NFElem> g = pgcd(g1, g2);
        check_invariant(degree(g) == 1, "join_fields: gcd is not linear");
        NFElem ia = -g[0];
        NFElem ib = de - NFElem(k) * ia;
        return {c, ia, ib};
    }
    throw budget_exhausted("join_fields: no primitive element found");
}

UPoly<NFElem> to_nf_poly(const QPoly& p) {
    UPoly<NFElem> r;
    for (const auto& c : p) r.emplace_back(c);
    trim(r);
    return r;
}

QPoly nf_norm(const UPoly<NFElem>& h) {
    FieldPtr k;
    for (const auto& c : h)
        if (c.field() && !c.is_rational()) {
            k = c.field();
            break;
        }
    if (!k) {
        QPoly r;
        for (const auto& c : h) r.push_back(c.is_zero() ? Rat(0) : c.rational());
        trim(r);
        return r;
    }
    int d = k->degree(), n = degree(h);
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (long t = 0; t <= long(d) * n; ++t) {
        QPoly w;
        Rat pw = 1;
        for (const auto& c : h) {
            w = padd(w, pscale(c.rep(), pw));
            pw *= t;
        }
        trim(w);
        xs.push_back(t);
        ys.push_back(resultant_padded(k->mq, w, d, d - 1));
    }
    return interpolate(xs, ys);
}

std::vector<ExtensionRoot> real_roots_over(const UPoly<NFElem>& h0, const FieldPtr& k, int max_degree) {
    UPoly<NFElem> h = h0;
    trim(h);
    std::vector<ExtensionRoot> out;
    if (degree(h) < 1) return out;
    if (!k) {
        QPoly q = nf_norm(h);
        for (const RAN& r : isolate_real_roots(q)) {
            auto [f, e] = field_of(r);
            out.push_back({f, NFElem(), e});
        }
        return out;
    }
    NFElem gen = generator(k);
    if (degree(h) == 1) {
        out.push_back({k, gen, -h[0] / h[1]});
        return out;
    }
    QPoly n = nf_norm(h);
    for (const RAN& r : isolate_real_roots(n)) {
        if (r.is_rational()) {
            NFElem e(r.rational());
            if (peval(h, e).is_zero()) out.push_back({k, gen, e});
            continue;
        }
        auto [fr, er] = field_of(r);
        FieldJoin j = join_fields(k, fr, max_degree);
        NFElem root = embed(er, j.image_b);
        NFElem acc;
        for (std::size_t i = h.size(); i-- > 0;) acc = acc * root + embed(h[i], j.image_a);
        if (acc.is_zero()) out.push_back({j.field, j.image_a, root});
    }
    return out;
}

std::pair<FieldPtr, std::vector<NFElem>> common_field(const std::vector<RAN>& xs, int max_degree) {
    FieldPtr k;
    std::vector<NFElem> elems;
    for (const auto& x : xs) {
        if (x.is_rational()) {
            elems.emplace_back(x.rational());
            continue;
        }
        auto [f, a] = field_of(x);
        FieldJoin j = join_fields(k, f, max_degree);
        for (auto& y : elems) y = embed(y, j.image_a);
        elems.push_back(embed(a, j.image_b));
        k = j.field;
    }
    return {k, elems};
}

} // namespace smallpoint
