#include "smallpoint/elimination/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace smallpoint {

AlgebraicSet::AlgebraicSet(std::size_t n, std::vector<QPolyN> gens, int D, std::vector<std::string> notes)
    : nvars(n), generators(std::move(gens)), degree_bound(D), meta(std::move(notes)) {
    if (n == 0) throw input_error("algebraic set needs at least one variable");
    for (const auto& g : generators) {
        if (g.nvars() != n) throw input_error("generator has the wrong number of variables");
        degree_bound = std::max(degree_bound, g.degree());
    }
}

std::vector<QPolyN> AlgebraicSet::nonzero_generators() const {
    std::vector<QPolyN> r;
    for (const auto& g : generators)
        if (!g.is_zero()) r.push_back(g);
    return r;
}

bool AlgebraicSet::trivially_empty() const {
    for (const auto& g : generators)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

namespace {

QPoly univariate_in(const QPolyN& f, std::size_t var) {
    QPoly r(std::size_t(std::max(f.degree_in(var), 0) + 1), Rat(0));
    for (const auto& [m, c] : f.terms()) r[m[var]] += c;
    trim(r);
    return r;
}

std::vector<std::size_t> active_vars(const QPolyN& u, const QPolyN& v, std::size_t skip) {
    std::vector<std::size_t> r;
    for (std::size_t j = 0; j < u.nvars(); ++j)
        if (j != skip && (u.involves(j) || v.involves(j))) r.push_back(j);
    return r;
}

QPolyN add_trailing_var(const QPolyN& f) {
    QPolyN r(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm = m;
        mm.push_back(0);
        r.add_term(mm, c);
    }
    return r;
}

// f mod g in x_var, g monic in x_var; the ideal (f, g) is unchanged
QPolyN remainder_by_monic(QPolyN f, const QPolyN& g, std::size_t var) {
    int d = g.degree_in(var);
    while (f.degree_in(var) >= d) {
        int k = f.degree_in(var);
        QPolyN lc = coefficients_in(f, var).back();
        Monomial shift(f.nvars(), 0);
        shift[var] = unsigned(k - d);
        QPolyN xs(f.nvars());
        xs.add_term(shift, Rat(1));
        f = f - lc * xs * g;
    }
    return f;
}

// greedy Q-linearly independent subfamily, in input order; its span, hence its ideal, is that of the input
std::vector<QPolyN> independent_subset(const std::vector<QPolyN>& fs) {
    std::vector<QPolyN> keep, rows;
    std::map<Monomial, std::size_t, GrlexLess> pivot;
    for (const auto& f : fs) {
        QPolyN v = f;
        while (!v.is_zero()) {
            const auto& [lm, lc] = *v.terms().rbegin();
            auto it = pivot.find(lm);
            if (it == pivot.end()) break;
            const QPolyN& row = rows[it->second];
            v = v - (lc / row.terms().rbegin()->second) * row;
        }
        if (v.is_zero()) continue;
        pivot.emplace(v.terms().rbegin()->first, rows.size());
        rows.push_back(v);
        keep.push_back(f);
    }
    return keep;
}

} // namespace

QPolyN mv_resultant(const QPolyN& u, const QPolyN& v, std::size_t var, int d, int e) {
    if (u.degree_in(var) > d || v.degree_in(var) > e) throw input_error("resultant: degree exceeds declared bound");
    std::size_t n = u.nvars();
    auto act = active_vars(u, v, var);
    if (act.empty()) {
        Rat r = resultant_padded(univariate_in(u, var), univariate_in(v, var), d, e);
        return QPolyN::constant(n, r);
    }
    std::size_t j = act.front();
    int du = std::max(u.degree_in(j), 0), dv = std::max(v.degree_in(j), 0);
    long bound = long(e) * du + long(d) * dv;
    std::vector<long> xs;
    std::vector<QPolyN> vals;
    for (long t = 0; t <= bound; ++t) {
        xs.push_back(t);
        vals.push_back(mv_resultant(substitute_value(u, j, Rat(t)), substitute_value(v, j, Rat(t)), var, d, e));
    }
    // interpolate every monomial's coefficient in x_j
    std::set<Monomial, GrlexLess> monos;
    for (const auto& p : vals)
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    QPolyN r(n);
    for (const auto& m : monos) {
        std::vector<Rat> ys;
        for (const auto& p : vals) ys.push_back(p.coefficient(m));
        QPoly c = interpolate(xs, ys);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            Monomial mm = m;
            mm[j] = unsigned(k);
            r.add_term(mm, c[k]);
        }
    }
    return r;
}

namespace {

// fixes variables 0..k-1 so that f stays nonzero; f involves only those
void nonzero_point_rec(const QPolyN& f, std::size_t k, int D, std::vector<long>& lam) {
    if (k == 0) return;
    std::size_t last = k - 1;
    auto coefs = coefficients_in(f, last);
    nonzero_point_rec(coefs.back(), k - 1, D, lam);
    QPolyN spec = f;
    for (std::size_t i = 0; i < last; ++i) spec = substitute_value(spec, i, Rat(lam[i]));
    QPoly uni = univariate_in(spec, last);
    std::vector<long> cands{1, -1};
    for (long c = 2; c <= D; ++c) cands.push_back(c);
    for (long c : cands)
        if (peval(uni, Rat(c)) != 0) {
            lam[last] = c;
            return;
        }
    throw invariant_error("nonzero_integer_point: candidate set exhausted");
}

} // namespace

std::vector<long> nonzero_integer_point(const QPolyN& f, int D) {
    if (f.is_zero()) throw input_error("nonzero_integer_point: zero polynomial");
    if (D < f.degree()) throw input_error("nonzero_integer_point: D is below the degree");
    std::vector<long> lam(f.nvars(), 1);
    nonzero_point_rec(f, f.nvars(), std::max(D, 1), lam);
    return lam;
}

bool is_monic_in_last(const QPolyN& f) {
    if (f.is_zero()) return false;
    std::size_t n = f.nvars();
    auto coefs = coefficients_in(f, n - 1);
    const QPolyN& top = coefs.back();
    return top.is_constant() && top.constant_term() == 1;
}

NoetherStep noether_step(const AlgebraicSet& V) {
    std::size_t n = V.nvars;
    if (n < 2) throw input_error("noether_step: need at least two variables");
    auto gens = V.nonzero_generators();
    if (gens.empty()) throw input_error("V is all of affine space");
    const QPolyN& f = gens.front();
    int D = std::max(V.degree_bound, f.degree());
    NoetherStep st;
    st.lambda = nonzero_integer_point(top_form(f), D);
    long ln = st.lambda[n - 1];
    st.phi = IntegerMatrix(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        st.phi[i][i] = ln;
        st.phi[i][n - 1] = -st.lambda[i];
    }
    st.phi[n - 1][n - 1] = 1;
    QMat inv = qinverse(to_qmat(st.phi));
    for (const auto& h : V.generators) st.transformed.push_back(substitute_matrix(h, inv));
    QPolyN g = substitute_matrix(f, inv);
    st.degree = g.degree();
    Monomial lead_m(n, 0);
    lead_m[n - 1] = unsigned(st.degree);
    Rat lc = g.coefficient(lead_m);
    check_invariant(lc != 0, "noether_step: leading coefficient in the last variable vanished");
    st.scale = 1 / lc;
    st.g = st.scale * g;
    check_invariant(is_monic_in_last(st.g) && st.g.degree_in(n - 1) == st.degree, "noether_step: g is not monic");
    return st;
}

std::vector<QPolyN> normalise_generators(const std::vector<QPolyN>& gens) {
    std::vector<QPolyN> out;
    for (const auto& g0 : gens) {
        if (g0.is_zero()) continue;
        QPolyN g = primitive_integer_form(g0);
        if (g.terms().rbegin()->second < 0) g = -g;
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

AlgebraicSet project_image(const AlgebraicSet& Vp) {
    std::size_t n = Vp.nvars;
    if (n < 2) throw input_error("project_image: need at least two variables");
    std::size_t last = n - 1;
    auto gens = Vp.nonzero_generators();
    auto it = std::find_if(gens.begin(), gens.end(), is_monic_in_last);
    if (it == gens.end()) throw input_error("project_image: no generator is monic in the last variable");
    QPolyN g1 = *it;
    int d = g1.degree_in(last);
    std::vector<QPolyN> hs, gs;
    for (auto jt = gens.begin(); jt != gens.end(); ++jt) {
        if (jt == it) continue;
        QPolyN r = jt->involves(last) ? remainder_by_monic(*jt, g1, last) : *jt;
        if (r.is_zero()) continue;
        (r.involves(last) ? gs : hs).push_back(r);
    }
    gs = independent_subset(gs);
    int D = 1;
    for (const auto& g : gs) D = std::max(D, g.degree_in(last));
    std::vector<QPolyN> out;
    if (d == 0) {
        out.push_back(QPolyN::constant(n, Rat(1)));
    } else {
        out = hs;
        std::size_t r = gs.size() + 1;
        double grid = std::pow(double(d + 1), double(r >= 2 ? r - 2 : 0));
        if (r >= 2 && grid <= double(max_grid_resultants)) {
            std::vector<int> lam(r - 2, 0);
            while (true) {
                QPolyN v = gs.back();
                for (std::size_t i = 0; i + 2 < r; ++i)
                    if (lam[i]) v = v + Rat(lam[i]) * gs[i];
                out.push_back(mv_resultant(g1, v, last, d, D));
                std::size_t k = 0;
                while (k < lam.size() && ++lam[k] > d) lam[k++] = 0;
                if (k == lam.size()) break;
            }
        } else if (r >= 2) {
            // Res(g1, sum t^i g_i) is the product over the roots of g1 of polynomials in t, so it
            // vanishes identically in t exactly where some root is common to every g_i
            QPolyN v(n + 1), tpow = QPolyN::constant(n + 1, Rat(1));
            Monomial tm(n + 1, 0);
            tm[n] = 1;
            QPolyN t(n + 1);
            t.add_term(tm, Rat(1));
            for (const auto& g : gs) {
                v = v + tpow * add_trailing_var(g);
                tpow = tpow * t;
            }
            QPolyN res = mv_resultant(add_trailing_var(g1), v, last, d, D);
            for (const auto& c : coefficients_in(res, n)) out.push_back(drop_trailing_vars(c, n));
        }
    }
    std::vector<QPolyN> dropped;
    for (const auto& h : independent_subset(normalise_generators(out))) dropped.push_back(drop_trailing_vars(h, n - 1));
    for (const auto& h : dropped)
        if (h.is_constant()) {
            dropped = {QPolyN::constant(n - 1, Rat(1))};
            break;
        }
    std::vector<std::string> meta = Vp.meta;
    meta.push_back("projection image of a set in " + std::to_string(n) + " variables");
    return AlgebraicSet(n - 1, dropped, 0, meta);
}

std::optional<int> dimension(const AlgebraicSet& V0) {
    AlgebraicSet V = V0;
    for (std::size_t step = 0; step <= V0.nvars; ++step) {
        auto gens = V.nonzero_generators();
        if (gens.empty()) return int(V.nvars);
        if (V.trivially_empty()) return -1;
        if (V.nvars == 1) {
            QPoly g;
            for (const auto& h : gens) g = pgcd(g, univariate_in(h, 0));
            return degree(g) >= 1 ? 0 : -1;
        }
        try {
            NoetherStep st = noether_step(V);
            std::vector<QPolyN> next = st.transformed;
            next.insert(next.begin(), st.g);
            V = project_image(AlgebraicSet(V.nvars, next, V.degree_bound));
        } catch (const budget_exhausted&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace smallpoint
