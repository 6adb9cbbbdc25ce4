#include "smallpoint/realpoint/realpoint.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace smallpoint {

std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "Found";
    case SearchStatus::no_real_point: return "NoRealPointFound";
    case SearchStatus::inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

struct RawLift {
    UPoly<NFElem> fiber;
    NFElem root;
    Rat bound;
};

// a real point with coordinates in one real number field
struct FieldPoint {
    FieldPtr k;
    std::vector<NFElem> x;
    BoundLedger ledger; // product of entries bounds the point's height
    std::vector<RawLift> lifts;
};

struct Ctx {
    SearchBudget budget;
    int max_depth = 0;
    long branches = 0;
    std::set<std::string> caps; // reasons the search was cut short
    std::size_t per_level_cap = 24;
};

std::size_t rep_size(const FieldPoint& p) {
    std::size_t s = 0;
    for (const auto& x : p.x)
        for (const auto& c : x.rep()) s += bit_length(c.get_num()) + bit_length(c.get_den());
    return s;
}

bool same_point(const FieldPoint& a, const FieldPoint& b) { return a.k == b.k && a.x == b.x; }

// cheap deterministic order: small fields and small representations first
void prune(std::vector<FieldPoint>& pts, std::size_t cap) {
    std::stable_sort(pts.begin(), pts.end(), [](const FieldPoint& a, const FieldPoint& b) {
        int da = field_degree(a.k), db = field_degree(b.k);
        if (da != db) return da < db;
        return rep_size(a) < rep_size(b);
    });
    std::vector<FieldPoint> out;
    for (auto& p : pts) {
        if (out.size() >= cap) break;
        bool dup = false;
        for (const auto& q : out) dup = dup || same_point(p, q);
        if (!dup) out.push_back(std::move(p));
    }
    pts = std::move(out);
}

QPoly univariate_of(const QPolyN& f) {
    QPoly r(std::size_t(std::max(f.degree_in(0), 0) + 1), Rat(0));
    for (const auto& [m, c] : f.terms()) r[m[0]] += c;
    trim(r);
    return r;
}

std::vector<FieldPoint> grid_points(std::size_t n) {
    static const long vals[3] = {0, 1, -1};
    std::vector<FieldPoint> out;
    std::vector<int> idx(n, 0);
    while (true) {
        FieldPoint p;
        for (std::size_t i = 0; i < n; ++i) p.x.emplace_back(Rat(vals[idx[i]]));
        out.push_back(std::move(p));
        std::size_t k = 0;
        while (k < n && ++idx[k] == 3) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

std::vector<FieldPoint> univariate_points(const std::vector<QPolyN>& gens) {
    QPoly g;
    for (const auto& h : gens) g = pgcd(g, univariate_of(h));
    if (degree(g) < 1) return {};
    Rat bound = root_height_bound(pmonic(g));
    std::vector<FieldPoint> out;
    for (const RAN& r : isolate_real_roots(g)) {
        auto [f, a] = field_of(r);
        FieldPoint p{f, {a}, {{"univariate-root-height-bound", bound}}, {}};
        out.push_back(std::move(p));
    }
    return out;
}

bool vanishes_at(const QPolyN& h, const FieldPoint& p) { return evaluate_at<NFElem>(h, p.x).is_zero(); }

AlgebraicSet repeated_root_impl(const AlgebraicSet& W, const QPolyN& g,
                                const std::function<bool(const QPolyN&)>& vanishes_on_samples) {
    std::size_t n = W.nvars, last = n - 1;
    if (g.nvars() != n) throw input_error("repeated_root_subset: variable count mismatch");
    if (!is_monic_in_last(g)) throw input_error("repeated_root_subset: g must be monic in the last variable");
    QPolyN h = partial_derivative_0(g, last);
    while (h.degree_in(last) >= 1 && vanishes_on_samples(h)) h = partial_derivative_0(h, last);
    std::vector<QPolyN> gens = W.generators;
    gens.push_back(h);
    std::vector<std::string> meta = W.meta;
    meta.push_back("repeated-root subset");
    return AlgebraicSet(n, gens, W.degree_bound, meta);
}

QPolyN poly_det(std::vector<std::vector<QPolyN>> a) {
    std::size_t r = a.size();
    if (r == 1) return a[0][0];
    QPolyN acc(a[0][0].nvars());
    for (std::size_t j = 0; j < r; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<QPolyN>> minor;
        for (std::size_t i = 1; i < r; ++i) {
            std::vector<QPolyN> row;
            for (std::size_t k = 0; k < r; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        QPolyN t = a[0][j] * poly_det(minor);
        acc = (j % 2) ? acc - t : acc + t;
    }
    return acc;
}

// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

FieldPoint to_original_coords(FieldPoint p, const std::vector<long>& lambda) {
    std::size_t n = lambda.size();
    long ln = lambda[n - 1];
    NFElem yn = p.x[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) p.x[i] = (p.x[i] + NFElem(Rat(lambda[i])) * yn) / NFElem(Rat(ln));
    long rho = std::abs(ln);
    for (std::size_t i = 0; i + 1 < n; ++i) rho = std::max(rho, 1 + std::abs(lambda[i]));
    p.ledger.push_back({"change-of-variables-row-sum", Rat(rho)});
    return p;
}

void lift_base_point(const AlgebraicSet& Vp, const QPolyN& g, const FieldPoint& b, Ctx& c,
                     std::vector<FieldPoint>& out) {
    UPoly<NFElem> gb = specialize_last<NFElem>(g, b.x);
    UPoly<NFElem> G = gb;
    for (const auto& h : Vp.generators) {
        if (h.is_zero()) continue;
        UPoly<NFElem> fh = specialize_last<NFElem>(h, b.x);
        if (!fh.empty()) G = pgcd(G, fh);
    }
    if (degree(G) < 1) return;
    std::vector<ExtensionRoot> roots;
    try {
        roots = real_roots_over(G, b.k, c.budget.max_field_degree);
    } catch (const budget_exhausted&) {
        c.caps.insert("field degree cap");
        return;
    }
    if (roots.empty()) return;
    int d = degree(gb);
    std::vector<NFElem> coefs(gb.begin(), gb.end() - 1);
    Rat bound = Rat(d) * height_point(b.k, coefs, Rat(1, 1000)).upper;
    for (const auto& r : roots) {
        FieldPoint p;
        p.k = r.field;
        for (const auto& xi : b.x) p.x.push_back(embed(xi, r.image_of_generator));
        p.x.push_back(r.root);
        p.ledger = b.ledger;
        p.ledger.push_back({"fiber-root-height-bound", bound});
        p.lifts = b.lifts;
        p.lifts.push_back({gb, r.root, bound});
        out.push_back(std::move(p));
    }
}

std::vector<FieldPoint> search(const AlgebraicSet& V, int depth, Ctx& c) {
    if (++c.branches > c.budget.max_branches) {
        c.caps.insert("branch budget");
        return {};
    }
    std::size_t n = V.nvars;
    auto gens = V.nonzero_generators();
    if (gens.empty()) return grid_points(n);
    if (V.trivially_empty()) return {};
    if (n == 1) return univariate_points(gens);
    if (depth >= c.max_depth) {
        c.caps.insert("depth budget");
        return {};
    }

    NoetherStep st = noether_step(V);
    std::vector<QPolyN> ygens{st.g};
    for (const auto& h : st.transformed)
        if (!h.is_zero()) ygens.push_back(h);
    AlgebraicSet Vp(n, ygens, V.degree_bound, V.meta);

    std::optional<int> dim = dimension(Vp);
    if (dim && *dim < 0) return {};

    std::vector<FieldPoint> ypts;
    for (const auto& b : search(project_image(Vp), depth + 1, c)) lift_base_point(Vp, st.g, b, c, ypts);

    // fibres can miss compact components whose shadow avoids the base points;
    // their critical and singular points are caught by the two subsets
    if (!dim) c.caps.insert("dimension unknown");
    if (!dim || *dim > 0) {
        auto rr = repeated_root_impl(Vp, st.g, [&](const QPolyN& h) {
            if (ypts.empty()) return false;
            for (const auto& p : ypts)
                if (!vanishes_at(h, p)) return false;
            return true;
        });
        if (!rr.trivially_empty())
            for (auto& p : search(rr, depth + 1, c)) ypts.push_back(std::move(p));
    }
    if (dim && *dim > 0 && std::size_t(*dim) < n) {
        auto js = jacobian_rank_subset(Vp, *dim);
        if (!js.trivially_empty())
            for (auto& p : search(js, depth + 1, c)) ypts.push_back(std::move(p));
    }

    std::vector<FieldPoint> out;
    for (auto& p : ypts) out.push_back(to_original_coords(std::move(p), st.lambda));
    prune(out, c.per_level_cap);
    return out;
}

std::vector<RAN> to_rans(const FieldPoint& p) {
    std::vector<RAN> r;
    for (const auto& x : p.x) r.push_back(x.to_ran());
    return r;
}

// exact lexicographic order of the real values
bool lex_less(const FieldPoint& a, const FieldPoint& b) {
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        RAN u = a.x[i].to_ran(), v = b.x[i].to_ran();
        int s = u.compare(v);
        if (s != 0) return s < 0;
    }
    return false;
}

QPolyN norm_to_rational(const MultivariatePolynomial& f, int max_field_degree) {
    if (is_rational(f)) return to_rational(f);
    std::vector<RAN> coefs;
    for (const auto& [m, c] : f.terms()) coefs.push_back(c);
    auto [k, elems] = common_field(coefs, max_field_degree);
    std::size_t n = f.nvars();
    QPolyN F(n + 1);
    std::size_t t = 0;
    for (const auto& [m, c] : f.terms()) {
        const QPoly& rep = elems[t++].rep();
        for (std::size_t j = 0; j < rep.size(); ++j) {
            if (rep[j] == 0) continue;
            Monomial mm = m;
            mm.push_back(unsigned(j));
            F.add_term(mm, rep[j]);
        }
    }
    QPolyN M(n + 1);
    for (std::size_t j = 0; j < k->mq.size(); ++j) {
        if (k->mq[j] == 0) continue;
        Monomial mm(n + 1, 0);
        mm[n] = unsigned(j);
        M.add_term(mm, k->mq[j]);
    }
    int e = std::max(F.degree_in(n), 0);
    QPolyN R = mv_resultant(M, F, n, k->degree(), e);
    return drop_trailing_vars(R, n);
}

SearchOutcome run_search(const AlgebraicSet& V, const std::vector<MultivariatePolynomial>* originals,
                         const SearchBudget& budget) {
    SearchOutcome out;
    std::size_t n = V.nvars;
    if (V.nonzero_generators().empty()) {
        PointCertificate cert;
        cert.coordinates.assign(n, RAN(0));
        cert.membership_checked = true;
        cert.height = height_rational(Rat(0));
        out.status = SearchStatus::found;
        out.certificate = cert;
        return out;
    }
    Ctx c;
    c.budget = budget;
    c.max_depth = budget.max_depth > 0 ? budget.max_depth : int(2 * n);
    std::vector<FieldPoint> pts;
    try {
        pts = search(V, 0, c);
    } catch (const budget_exhausted& e) {
        c.caps.insert(e.what());
    }

    struct Scored {
        FieldPoint p;
        HeightEnclosure h;
    };
    std::vector<Scored> ok;
    bool failed_original = false;
    for (auto& p : pts) {
        bool member = true;
        for (const auto& g : V.generators) member = member && vanishes_at(g, p);
        check_invariant(member, "search returned a point off the set");
        if (originals && !verify_membership(to_rans(p), *originals)) {
            failed_original = true;
            continue;
        }
        HeightEnclosure h = height_point(p.k, p.x, budget.tol);
        ok.push_back({std::move(p), std::move(h)});
    }
    if (ok.empty()) {
        if (failed_original) c.caps.insert("points of the normed system miss the original generators");
        if (c.caps.empty()) {
            out.status = SearchStatus::no_real_point;
            out.reason = "every branch ended without a real point";
        } else {
            out.status = SearchStatus::inconclusive;
            std::string r;
            for (const auto& s : c.caps) r += (r.empty() ? "" : "; ") + s;
            out.reason = r;
        }
        return out;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < ok.size(); ++i) {
        const auto &a = ok[i], &b = ok[best];
        if (a.h.upper < b.h.upper || (a.h.upper == b.h.upper && lex_less(a.p, b.p))) best = i;
    }
    Scored& s = ok[best];
    PointCertificate cert;
    cert.coordinates = to_rans(s.p);
    cert.membership_checked = true;
    cert.height = s.h;
    cert.bound_ledger = s.p.ledger;
    cert.field_degree = field_degree(s.p.k);
    for (const auto& l : s.p.lifts) {
        LiftRecord rec;
        for (const auto& co : l.fiber) rec.fiber.push_back(co.to_ran());
        rec.root = l.root.to_ran();
        rec.bound = l.bound;
        cert.lifts.push_back(std::move(rec));
    }
    out.status = SearchStatus::found;
    out.certificate = std::move(cert);
    return out;
}

} // namespace

AlgebraicSet repeated_root_subset(const AlgebraicSet& W, const QPolyN& g, const std::vector<std::vector<RAN>>& samples) {
    auto mv = [](const QPolyN& h) { return from_rational(h); };
    return repeated_root_impl(W, g, [&](const QPolyN& h) {
        if (samples.empty()) return false;
        MultivariatePolynomial hm = mv(h);
        for (const auto& p : samples)
            if (!evaluate(hm, p).is_zero()) return false;
        return true;
    });
}

AlgebraicSet jacobian_rank_subset(const AlgebraicSet& W, int dimW) {
    std::size_t n = W.nvars;
    if (dimW < 0 || std::size_t(dimW) >= n) throw input_error("jacobian_rank_subset: need 0 <= dim W < nvars");
    auto gens = W.nonzero_generators();
    std::size_t r = n - std::size_t(dimW);
    std::vector<QPolyN> out = W.generators;
    for (const auto& rows : subsets(gens.size(), r))
        for (const auto& cols : subsets(n, r)) {
            std::vector<std::vector<QPolyN>> m;
            for (auto i : rows) {
                std::vector<QPolyN> row;
                for (auto j : cols) row.push_back(partial_derivative_0(gens[i], j));
                m.push_back(row);
            }
            QPolyN d = poly_det(m);
            if (!d.is_zero()) out.push_back(d);
        }
    std::vector<std::string> meta = W.meta;
    meta.push_back("jacobian-rank subset");
    return AlgebraicSet(n, normalise_generators(out), W.degree_bound, meta);
}

std::vector<RAN> lift_fiber(const QPolyN& g, const std::vector<RAN>& base, int max_field_degree) {
    if (!is_monic_in_last(g)) throw input_error("lift_fiber: g must be monic in the last variable");
    auto [k, xs] = common_field(base, max_field_degree);
    UPoly<NFElem> gb = specialize_last<NFElem>(g, xs);
    std::vector<RAN> out;
    for (const auto& r : real_roots_over(gb, k, max_field_degree)) out.push_back(r.root.to_ran());
    return out;
}

bool verify_membership(const std::vector<RAN>& p, const AlgebraicSet& V) {
    if (p.size() != V.nvars) throw input_error("verify_membership: point dimension does not match the variable count");
    std::vector<MultivariatePolynomial> gens;
    for (const auto& g : V.generators) gens.push_back(from_rational(g));
    return verify_membership(p, gens);
}

bool verify_membership(const std::vector<RAN>& p, const std::vector<MultivariatePolynomial>& gens) {
    for (const auto& g : gens) {
        if (g.nvars() != p.size()) throw input_error("verify_membership: point dimension does not match the variable count");
        if (!evaluate(g, p).is_zero()) return false;
    }
    return true;
}

SearchOutcome find_small_height_real_point(const AlgebraicSet& V, const SearchBudget& budget) {
    return run_search(V, nullptr, budget);
}

SearchOutcome find_small_height_real_point(const std::vector<MultivariatePolynomial>& gens, const SearchBudget& budget) {
    if (gens.empty()) throw input_error("find_small_height_real_point: empty system needs a variable count");
    std::size_t n = gens.front().nvars();
    bool all_rational = true;
    std::vector<QPolyN> q;
    for (const auto& g : gens) {
        if (g.nvars() != n) throw input_error("find_small_height_real_point: generators disagree on the variable count");
        all_rational = all_rational && is_rational(g);
        try {
            q.push_back(norm_to_rational(g, budget.max_field_degree));
        } catch (const budget_exhausted&) {
            SearchOutcome o;
            o.reason = "coefficient field exceeds the degree cap";
            return o;
        }
    }
    AlgebraicSet V(n, q);
    return run_search(V, all_rational ? nullptr : &gens, budget);
}

} // namespace smallpoint
