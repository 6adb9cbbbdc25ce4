#include "smallpoint/nflattice/nflattice.hpp"

#include "smallpoint/exactnum/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace smallpoint {

namespace {

QVec padded(QVec a, int d) {
    a.resize(std::size_t(d), Rat(0));
    return a;
}

QVec unit_vec(int d, int k) {
    QVec e(std::size_t(d), Rat(0));
    e[std::size_t(k)] = 1;
    return e;
}

bool is_zero_vec(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// upper bound for sqrt(x), x >= 0, within 2^-30
Rat sqrt_upper(const Rat& x) {
    const unsigned long k = 30;
    Int scaled = floor_rat(x * Rat(pow_int(Int(4), k)));
    return Rat(isqrt(scaled) + 1, pow_int(Int(2), k));
}

struct GramSchmidt {
    QMat mu;
    QVec b; // squared lengths of the orthogonalised vectors
};

GramSchmidt gram_schmidt(const QMat& g) {
    std::size_t n = g.size();
    GramSchmidt gs{QMat(n, QVec(n, Rat(0))), QVec(n, Rat(0))};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s = g[i][j];
            for (std::size_t l = 0; l < j; ++l) s -= gs.mu[j][l] * gs.mu[i][l] * gs.b[l];
            gs.mu[i][j] = s / gs.b[j];
        }
        Rat s = g[i][i];
        for (std::size_t l = 0; l < i; ++l) s -= gs.mu[i][l] * gs.mu[i][l] * gs.b[l];
        if (s <= 0) throw input_error("lll: basis is rank deficient or the form is not positive definite");
        gs.b[i] = s;
    }
    return gs;
}

Rat permutation_sign_det(const std::function<QVec(std::size_t, std::size_t)>& at, std::size_t r,
                         const NumberField& F, QVec& det_out) {
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    QVec acc(std::size_t(F.degree), Rat(0));
    do {
        int inv = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inv;
        QVec t = nf_one(F);
        for (std::size_t i = 0; i < r && !is_zero_vec(t); ++i) t = nf_times(F, t, at(i, perm[i]));
        acc = (inv % 2) ? nf_sub(acc, t) : nf_add(acc, t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    det_out = acc;
    return nf_norm_of(F, acc);
}

// coefficient vectors in [-B, B]^n with first nonzero entry positive, nearest first
std::vector<std::vector<long>> short_coefficients(const QMat& gram, long B, std::size_t cap) {
    std::size_t n = gram.size();
    std::vector<std::pair<Rat, std::vector<long>>> all;
    std::vector<long> c(n, -B);
    while (true) {
        bool nonzero = false, canonical = false;
        for (long x : c)
            if (x != 0) {
                nonzero = true;
                canonical = x > 0;
                break;
            }
        if (nonzero && canonical) {
            Rat q = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) q += Rat(c[i] * c[j]) * gram[i][j];
            all.push_back({q, c});
        }
        std::size_t k = 0;
        while (k < n && ++c[k] > B) c[k++] = -B;
        if (k == n) break;
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    if (all.size() > cap) all.resize(cap);
    std::vector<std::vector<long>> out;
    for (auto& [q, v] : all) out.push_back(std::move(v));
    return out;
}

long box_radius_for(std::size_t n, double budget) {
    long B = 1;
    while (std::pow(double(2 * (B + 1) + 1), double(n)) <= budget && B < 200) ++B;
    return B;
}

} // namespace

// ---------------------------------------------------------------- fields

FieldPtr NumberField::real_place(std::size_t j) const {
    if (degree == 1) return nullptr;
    return make_field(defining_poly, real_roots.at(j));
}

NumberField rational_field() {
    NumberField F;
    F.defining_poly = ZPoly{Int(0), Int(1)};
    F.degree = 1;
    F.real_roots = {RAN(0)};
    F.integral_basis = qidentity(1);
    F.disc = 1;
    return F;
}

NumberField make_number_field(const ZPoly& p0) {
    ZPoly p = p0;
    trim(p);
    int d = degree(p);
    if (d < 1) throw input_error("make_number_field: need a polynomial of degree >= 1");
    if (!is_irreducible(p)) throw input_error("make_number_field: polynomial is reducible");
    if (d == 1) return rational_field();
    Int content = 0;
    for (const auto& c : p) content = gcd_int(content, c);
    if (lead(p) < 0) content = -content;
    for (auto& c : p) c = exact_div(c, content);
    Int c = lead(p);
    ZPoly m(p.size());
    for (int i = 0; i <= d; ++i) m[std::size_t(i)] = (i == d) ? Int(1) : p[std::size_t(i)] * pow_int(c, unsigned(d - 1 - i));

    NumberField F;
    F.defining_poly = m;
    F.degree = d;
    F.real_roots = isolate_real_roots(m);
    std::size_t want = (std::size_t(d) - F.real_roots.size()) / 2;
    for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 2) {
        F.complex_roots.clear();
        for (auto& rb : complex_roots(m, prec))
            if (rb.box.im.positive()) F.complex_roots.push_back(rb);
        if (F.complex_roots.size() == want) break;
    }
    check_invariant(F.complex_roots.size() == want, "make_number_field: complex embeddings not separated");
    F.integral_basis = maximal_order(m);
    Rat disc = lattice_discriminant(m, F.integral_basis);
    check_invariant(disc.get_den() == 1, "make_number_field: non-integral discriminant");
    F.disc = disc.get_num();
    return F;
}

QVec nf_one(const NumberField& F) { return unit_vec(F.degree, 0); }

QVec nf_add(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

QVec nf_sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

QVec nf_times(const NumberField& F, const QVec& a, const QVec& b) { return nf_mul(F.defining_poly, a, b); }

Rat nf_norm_of(const NumberField& F, const QVec& a) {
    QMat rows;
    for (int k = 0; k < F.degree; ++k) rows.push_back(nf_times(F, a, unit_vec(F.degree, k)));
    return qdet(rows);
}

QVec to_power_basis(const NumberField& F, const QVec& c) {
    QVec r(std::size_t(F.degree), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t l = 0; l < r.size(); ++l) r[l] += c[k] * F.integral_basis[k][l];
    return r;
}

QVec to_integral_coords(const NumberField& F, const QVec& a) {
    return coords_in(F.integral_basis, padded(a, F.degree));
}

DyadicInterval real_embedding(const NumberField& F, std::size_t j, const QVec& a, const Rat& eps) {
    QVec v = padded(a, F.degree);
    bool rational = true;
    for (std::size_t i = 1; i < v.size(); ++i) rational = rational && v[i] == 0;
    if (rational) return DyadicInterval::exact(v[0], v[0]);
    return NFElem(F.real_place(j), v).enclose(eps);
}

Int minkowski_bound(const NumberField& F) {
    int d = F.degree;
    std::size_t s = F.complex_roots.size();
    Rat m = Rat(factorial(unsigned(d))) / Rat(pow_int(Int(d), unsigned(d)));
    Rat four_over_pi = Rat(4) / Rat(314159, 100000); // pi > 3.14159
    m *= pow_rat(four_over_pi, s);
    m *= sqrt_upper(Rat(abs_int(F.disc)));
    return std::max(Int(1), floor_rat(m));
}

// ---------------------------------------------------------------- LLL

GramReduction lll_reduce_gram(const QMat& gram) {
    std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw input_error("lll: gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw input_error("lll: gram matrix is not symmetric");
    GramReduction r{zidentity(n), gram};
    if (n == 0) return r;
    const Rat delta(3, 4);
    GramSchmidt gs = gram_schmidt(r.gram);
    std::size_t k = 1;
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < n; ++c) r.transform[dst][c] -= q * r.transform[src][c];
        Rat qq(q);
        Rat gkk = r.gram[dst][dst] - 2 * qq * r.gram[dst][src] + qq * qq * r.gram[src][src];
        for (std::size_t c = 0; c < n; ++c)
            if (c != dst) r.gram[dst][c] -= qq * r.gram[src][c];
        for (std::size_t c = 0; c < n; ++c)
            if (c != dst) r.gram[c][dst] = r.gram[dst][c];
        r.gram[dst][dst] = gkk;
    };
    std::size_t guard = 0;
    while (k < n) {
        check_invariant(++guard < 1000000, "lll: no termination");
        for (std::size_t j = k; j-- > 0;) {
            Int q = round_rat(gs.mu[k][j]);
            if (q != 0) {
                row_op(k, j, q);
                gs = gram_schmidt(r.gram);
            }
        }
        if (gs.b[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.b[k - 1]) {
            ++k;
        } else {
            std::swap(r.transform[k], r.transform[k - 1]);
            std::swap(r.gram[k], r.gram[k - 1]);
            for (auto& row : r.gram) std::swap(row[k], row[k - 1]);
            gs = gram_schmidt(r.gram);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return r;
}

LLLResult lll_reduce(const ZMat& basis, const std::optional<QMat>& form) {
    if (basis.empty()) throw input_error("lll_reduce: empty basis");
    std::size_t m = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != m) throw input_error("lll_reduce: ragged basis");
    QMat f = form ? *form : qidentity(m);
    if (f.size() != m) throw input_error("lll_reduce: form has the wrong size");
    QMat bq = to_qmat(basis);
    GramReduction g = lll_reduce_gram(qmatmul(qmatmul(bq, f), qtranspose(bq)));
    return {zmatmul(g.transform, basis), g.transform, g.gram};
}

// ---------------------------------------------------------------- module reduction

std::size_t NFModuleLattice::ambient_dim() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < fields.size(); ++i) n += std::size_t(multiplicities.at(i) * fields[i].degree);
    return n;
}

namespace {

struct BlockLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
};

BlockLayout layout_of(const NFModuleLattice& L) {
    BlockLayout b;
    for (std::size_t i = 0; i < L.fields.size(); ++i) {
        b.offset.push_back(b.total);
        b.total += std::size_t(L.multiplicities[i] * L.fields[i].degree);
    }
    return b;
}

// j-th coordinate (an element of F_i, power basis) of block i of v
QVec component(const NFModuleLattice& L, const BlockLayout& b, const QVec& v, std::size_t i, int j) {
    int d = L.fields[i].degree;
    std::size_t o = b.offset[i] + std::size_t(j * d);
    QVec c(v.begin() + long(o), v.begin() + long(o + std::size_t(d)));
    return to_power_basis(L.fields[i], c);
}

void put_component(const NFModuleLattice& L, const BlockLayout& b, QVec& v, std::size_t i, int j, const QVec& x) {
    int d = L.fields[i].degree;
    QVec c = to_integral_coords(L.fields[i], x);
    std::size_t o = b.offset[i] + std::size_t(j * d);
    for (int k = 0; k < d; ++k) v[o + std::size_t(k)] = c[std::size_t(k)];
}

// sum over embeddings of sigma(w_k) * conj sigma(w_l) on the integral basis, rounded to 2^-40
QMat t2_gram(const NumberField& F) {
    std::size_t d = std::size_t(F.degree);
    using C = std::complex<long double>;
    std::vector<std::pair<C, long double>> places; // value of the generator, weight
    for (const auto& r : F.real_roots) places.push_back({C((long double)r.refine(Rat(1, 1L << 50)).mid().get_d(), 0), 1});
    for (const auto& b : F.complex_roots) {
        long double re = 0.5L * ((long double)b.box.re.lo_d() + (long double)b.box.re.hi_d());
        long double im = 0.5L * ((long double)b.box.im.lo_d() + (long double)b.box.im.hi_d());
        places.push_back({C(re, im), 2});
    }
    std::vector<std::vector<C>> val(d);
    for (std::size_t k = 0; k < d; ++k)
        for (const auto& [z, w] : places) {
            C v = 0, pw = 1;
            for (const auto& c : F.integral_basis[k]) {
                v += (long double)c.get_d() * pw;
                pw *= z;
            }
            val[k].push_back(v);
        }
    const long double scale = 1099511627776.0L; // 2^40
    QMat g(d, QVec(d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k; l < d; ++l) {
            long double acc = 0;
            for (std::size_t p = 0; p < places.size(); ++p) acc += places[p].second * std::real(val[k][p] * std::conj(val[l][p]));
            Rat q(Int(std::to_string(std::llround(acc * scale)), 10), Int("1099511627776", 10));
            q.canonicalize();
            g[k][l] = g[l][k] = q;
        }
    return g;
}

struct BlockChoice {
    FieldMatrix nu;
    Rat block_index;
};

BlockChoice reduce_block(const NFModuleLattice& L, const BlockLayout& lay, std::size_t i, const Rat& vol,
                         const Int& target) {
    const NumberField& F = L.fields[i];
    int d = F.degree, r = L.multiplicities[i];
    std::size_t n = std::size_t(r * d);
    // functionals y -> integral coordinates of sum_j y_j x_j, one row per (basis vector, coordinate)
    QMat rows;
    for (const auto& v : L.basis) {
        std::vector<QVec> x;
        for (int j = 0; j < r; ++j) x.push_back(component(L, lay, v, i, j));
        std::vector<QVec> cols; // cols[j*d+k] = integral coords of omega_k * x_j
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < d; ++k)
                cols.push_back(to_integral_coords(F, nf_times(F, F.integral_basis[std::size_t(k)], x[std::size_t(j)])));
        for (int l = 0; l < d; ++l) {
            QVec row;
            for (std::size_t c = 0; c < n; ++c) row.push_back(cols[c][std::size_t(l)]);
            rows.push_back(row);
        }
    }
    QMat lam = lattice_hnf(rows);
    check_invariant(lam.size() == n, "minkowski_reduce: pairing is degenerate");
    QMat dual = qtranspose(qinverse(lam)); // rows: basis of {y : rows . y integral}
    // candidates are ranked by the embedding form sum |sigma(y_j)|^2, which tracks |N(det)|
    QMat t2 = t2_gram(F), form(n, QVec(n, Rat(0)));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) form[std::size_t(j * d + k)][std::size_t(j * d + l)] = t2[std::size_t(k)][std::size_t(l)];
    GramReduction red = lll_reduce_gram(qmatmul(qmatmul(dual, form), qtranspose(dual)));
    QMat dred = qmatmul(to_qmat(red.transform), dual);

    std::size_t cap = r == 1 ? 5000 : (r == 2 ? 400 : (r == 3 ? 60 : 24));
    auto coeffs = short_coefficients(red.gram, box_radius_for(n, 20000), cap);
    std::vector<std::vector<QVec>> cand; // each: r elements of F (a row of nu)
    for (const auto& c : coeffs) {
        QVec y(n, Rat(0));
        for (std::size_t t = 0; t < n; ++t)
            if (c[t] != 0)
                for (std::size_t u = 0; u < n; ++u) y[u] += Rat(c[t]) * dred[t][u];
        std::vector<QVec> row;
        for (int j = 0; j < r; ++j)
            row.push_back(to_power_basis(F, QVec(y.begin() + j * d, y.begin() + (j + 1) * d)));
        cand.push_back(row);
    }

    BlockChoice best;
    bool have = false;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) -> bool {
        if (depth == std::size_t(r)) {
            QVec det;
            Rat nm = permutation_sign_det(
                [&](std::size_t a, std::size_t b) { return cand[pick[a]][b]; }, std::size_t(r), F, det);
            if (nm == 0) return false;
            Rat idx = abs_rat(nm) * vol;
            if (!have || idx < best.block_index) {
                have = true;
                best.block_index = idx;
                best.nu.clear();
                for (std::size_t a = 0; a < std::size_t(r); ++a) best.nu.push_back(cand[pick[a]]);
            }
            return idx <= Rat(target);
        }
        for (std::size_t s = start; s < cand.size(); ++s) {
            pick[depth] = s;
            if (rec(depth + 1, s + 1)) return true;
        }
        return false;
    };
    rec(0, 0);
    check_invariant(have, "minkowski_reduce: no invertible block found");
    return best;
}

} // namespace

QMat apply_blocks(const NFModuleLattice& L, const std::vector<FieldMatrix>& nu, const QMat& vectors) {
    BlockLayout lay = layout_of(L);
    QMat out;
    for (const auto& v : vectors) {
        QVec w(lay.total, Rat(0));
        for (std::size_t i = 0; i < L.fields.size(); ++i) {
            int r = L.multiplicities[i];
            std::vector<QVec> x;
            for (int j = 0; j < r; ++j) x.push_back(component(L, lay, v, i, j));
            for (int k = 0; k < r; ++k) {
                QVec s(std::size_t(L.fields[i].degree), Rat(0));
                for (int j = 0; j < r; ++j)
                    s = nf_add(s, nf_times(L.fields[i], nu[i][std::size_t(k)][std::size_t(j)], x[std::size_t(j)]));
                put_component(L, lay, w, i, k, s);
            }
        }
        out.push_back(w);
    }
    return out;
}

MinkowskiReduction minkowski_reduce(const NFModuleLattice& L) {
    if (L.fields.empty() || L.fields.size() != L.multiplicities.size())
        throw input_error("minkowski_reduce: fields and multiplicities disagree");
    for (int r : L.multiplicities)
        if (r < 1) throw input_error("minkowski_reduce: multiplicities must be positive");
    BlockLayout lay = layout_of(L);
    std::size_t N = lay.total;
    if (L.basis.size() != N) throw input_error("minkowski_reduce: basis must have full rank");
    for (const auto& v : L.basis)
        if (v.size() != N) throw input_error("minkowski_reduce: basis vectors have the wrong length");
    if (qrank(L.basis) != N) throw input_error("minkowski_reduce: basis is rank deficient");

    // L' = O L, generated by omega_k * (block i of v)
    QMat gens;
    for (const auto& v : L.basis)
        for (std::size_t i = 0; i < L.fields.size(); ++i)
            for (const auto& w : L.fields[i].integral_basis) {
                QVec g(N, Rat(0));
                for (int j = 0; j < L.multiplicities[i]; ++j)
                    put_component(L, lay, g, i, j, nf_times(L.fields[i], w, component(L, lay, v, i, j)));
                gens.push_back(g);
            }
    QMat Lp = lattice_hnf(gens);
    check_invariant(Lp.size() == N, "minkowski_reduce: O L has the wrong rank");
    ZMat c;
    for (const auto& v : L.basis) {
        ZVec row;
        for (const auto& x : coords_in(Lp, v)) {
            check_invariant(x.get_den() == 1, "minkowski_reduce: L is not inside O L");
            row.push_back(x.get_num());
        }
        c.push_back(row);
    }
    auto sd = smith_diagonal(c);

    MinkowskiReduction res;
    res.exponent = sd.empty() ? Int(1) : sd.back();
    res.bound = Rat(pow_int(res.exponent, N));
    res.ledger.push_back({"module exponent^rank", res.bound});
    for (std::size_t i = 0; i < L.fields.size(); ++i) {
        QMat block;
        for (const auto& v : Lp) {
            std::size_t o = lay.offset[i], len = std::size_t(L.multiplicities[i] * L.fields[i].degree);
            block.push_back(QVec(v.begin() + long(o), v.begin() + long(o + len)));
        }
        Rat vol = lattice_volume(lattice_hnf(block));
        Int mb = minkowski_bound(L.fields[i]);
        res.bound *= Rat(mb);
        res.ledger.push_back({"minkowski bound of field " + std::to_string(i), Rat(mb)});
        BlockChoice ch = reduce_block(L, lay, i, vol, mb);
        res.ledger.push_back({"achieved index of block " + std::to_string(i), ch.block_index});
        res.nu.push_back(std::move(ch.nu));
    }
    res.image = apply_blocks(L, res.nu, L.basis);
    for (const auto& row : res.image)
        for (const auto& x : row) check_invariant(x.get_den() == 1, "minkowski_reduce: nu L is not inside L0");
    Rat det = abs_rat(qdet(res.image));
    check_invariant(det.get_den() == 1 && det != 0, "minkowski_reduce: index is not a positive integer");
    res.index = det.get_num();
    return res;
}

// ---------------------------------------------------------------- sign elements

namespace {

// -1, 0, +1 for x - t at embedding j, decided exactly
int compare_at(const NumberField& F, std::size_t j, const QVec& z, const Rat& t) {
    QVec v = padded(z, F.degree);
    bool rational = true;
    for (std::size_t i = 1; i < v.size(); ++i) rational = rational && v[i] == 0;
    if (rational) return v[0] < t ? -1 : (v[0] > t ? 1 : 0);
    // an irrational value never equals a rational threshold
    for (Rat eps(1, 1 << 20);; eps /= Rat(1 << 20)) {
        DyadicInterval I = real_embedding(F, j, v, eps);
        if (I.hi() < t) return -1;
        if (I.lo() > t) return 1;
    }
}

std::vector<std::vector<long double>> invert(std::vector<std::vector<long double>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<long double>> inv(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        long double piv = a[c][c];
        check_invariant(piv != 0, "sign element: singular embedding matrix");
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            long double f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

} // namespace

SignElement totally_real_sign_element(const NumberField& F, const std::vector<int>& signs) {
    if (!F.totally_real()) throw input_error("totally_real_sign_element: field has complex embeddings");
    std::size_t d = std::size_t(F.degree);
    if (signs.size() != d) throw input_error("totally_real_sign_element: need one sign per real embedding");
    for (int s : signs)
        if (s != 1 && s != -1) throw input_error("totally_real_sign_element: signs must be +1 or -1");

    const ZPoly& m = F.defining_poly;
    QMat tr(d, QVec(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            tr[a][b] = nf_trace(m, nf_mul(m, F.integral_basis[a], F.integral_basis[b]));
    GramReduction red = lll_reduce_gram(tr);
    QMat basis = qmatmul(to_qmat(red.transform), F.integral_basis);
    GramSchmidt gs = gram_schmidt(red.gram);
    Rat sum = 0;
    for (const auto& b : gs.b) sum += b;

    SignElement out;
    out.mu_hat = sqrt_upper(sum) / 2;
    Rat side = 3 * out.mu_hat;
    out.bound = pow_rat(side, d);
    out.ledger.push_back({"covering radius upper bound", out.mu_hat});
    out.ledger.push_back({"(3 mu)^d", out.bound});

    std::vector<std::vector<long double>> E(d, std::vector<long double>(d));
    Rat fine(1, Int(1) << 60);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) E[k][j] = real_embedding(F, j, basis[k], fine).mid().get_d();
    auto Einv = invert(E);
    long double s3 = side.get_d();
    std::vector<long> lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
        long double a = 0, b = 0;
        for (std::size_t j = 0; j < d; ++j) {
            long double e1 = 0, e2 = signs[j] * s3 * Einv[j][k];
            a += std::min(e1, e2);
            b += std::max(e1, e2);
        }
        lo[k] = long(std::floor(a)) - 1;
        hi[k] = long(std::ceil(b)) + 1;
    }

    bool have = false;
    Rat best_score;
    std::vector<long> c(lo);
    while (true) {
        QVec z(d, Rat(0));
        for (std::size_t k = 0; k < d; ++k)
            if (c[k] != 0)
                for (std::size_t l = 0; l < d; ++l) z[l] += Rat(c[k]) * basis[k][l];
        bool inside = !is_zero_vec(z);
        for (std::size_t j = 0; j < d && inside; ++j) {
            if (compare_at(F, j, z, Rat(0)) != signs[j]) inside = false;
            else if (compare_at(F, j, z, signs[j] * side) != -signs[j]) inside = false;
        }
        if (inside) {
            Rat score = 1;
            for (std::size_t j = 0; j < d; ++j) score *= std::max(Rat(1), abs_rat(real_embedding(F, j, z, fine).mid()));
            if (!have || score < best_score || (score == best_score && z < out.zeta)) {
                have = true;
                best_score = score;
                out.zeta = z;
            }
        }
        std::size_t k = 0;
        while (k < d && ++c[k] > hi[k]) c[k] = lo[k], ++k;
        if (k == d) break;
    }
    check_invariant(have, "totally_real_sign_element: the box holds no lattice point");

    for (std::size_t j = 0; j < d; ++j) {
        FieldPtr place = F.real_place(j);
        out.embeddings.push_back(place ? NFElem(place, out.zeta).to_ran() : RAN(out.zeta[0]));
        check_invariant(out.embeddings.back().sign() == signs[j], "totally_real_sign_element: sign check failed");
    }
    out.height = height_algebraic(out.embeddings[0], Rat(1, 1000000000));
    Rat prod = 1;
    for (std::size_t j = 0; j < d; ++j)
        prod *= std::max(Rat(1), Rat(abs_rat(real_embedding(F, j, out.zeta, fine).hi()) + fine));
    out.ledger.push_back({"product of max(1, |embedding|)", prod});
    return out;
}

// ---------------------------------------------------------------- Hermitian scaling

QVec nf_conj(const NumberField& F, const QVec& a0) {
    QVec a = padded(a0, F.degree);
    if (F.totally_real()) return a;
    if (F.degree == 2) {
        // conj(theta) = -m1 - theta
        Rat m1(F.defining_poly[1]);
        return QVec{a[0] - a[1] * m1, -a[1]};
    }
    throw input_error("nf_conj: complex conjugation is only available for totally real and imaginary quadratic fields");
}

HermitianScaling hermitian_scale(const NumberField& F, const FieldMatrix& A0) {
    std::size_t r = A0.size();
    if (r == 0) throw input_error("hermitian_scale: empty matrix");
    int d = F.degree;
    FieldMatrix A(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (A0[i].size() != r) throw input_error("hermitian_scale: matrix is not square");
        for (const auto& x : A0[i]) A[i].push_back(padded(x, d));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (A[i][j] != nf_conj(F, A[j][i])) throw input_error("hermitian_scale: matrix is not Hermitian");

    // restriction of scalars: vector u = omega_k e_j, index j*d + k
    std::size_t n = r * std::size_t(d);
    auto vec_of = [&](std::size_t u) {
        std::vector<QVec> v(r, QVec(std::size_t(d), Rat(0)));
        v[u / std::size_t(d)] = F.integral_basis[u % std::size_t(d)];
        return v;
    };
    auto form = [&](const std::vector<QVec>& x, const std::vector<QVec>& y) {
        QVec s(std::size_t(d), Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s = nf_add(s, nf_times(F, nf_conj(F, x[i]), nf_times(F, A[i][j], y[j])));
        return s;
    };
    QMat G(n, QVec(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) G[u][v] = nf_trace(F.defining_poly, form(vec_of(u), vec_of(v)));
    GramReduction red;
    try {
        red = lll_reduce_gram(G);
    } catch (const input_error&) {
        throw input_error("hermitian_scale: form is not positive definite at some embedding");
    }

    FieldPtr k = d == 1 ? nullptr : make_field(F.defining_poly, std::nullopt);
    auto el = [&](const QVec& a) { return d == 1 ? NFElem(a[0]) : NFElem(k, a); };
    std::vector<std::vector<NFElem>> echelon; // rows reduced against earlier pivots
    std::vector<std::size_t> pivots;
    HermitianScaling out;
    std::vector<std::vector<QVec>> chosen;
    for (std::size_t t = 0; t < n && chosen.size() < r; ++t) {
        std::vector<QVec> q(r, QVec(std::size_t(d), Rat(0)));
        for (std::size_t u = 0; u < n; ++u)
            if (red.transform[t][u] != 0) {
                auto b = vec_of(u);
                for (std::size_t i = 0; i < r; ++i)
                    for (int l = 0; l < d; ++l) q[i][std::size_t(l)] += Rat(red.transform[t][u]) * b[i][std::size_t(l)];
            }
        std::vector<NFElem> row;
        for (const auto& x : q) row.push_back(el(x));
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            NFElem f = row[pivots[e]] / echelon[e][pivots[e]];
            for (std::size_t i = 0; i < r; ++i) row[i] = row[i] - f * echelon[e][i];
        }
        std::size_t p = r;
        for (std::size_t i = 0; i < r && p == r; ++i)
            if (!row[i].is_zero()) p = i;
        if (p == r) continue;
        echelon.push_back(row);
        pivots.push_back(p);
        chosen.push_back(q);
        out.entry_bound = std::max(out.entry_bound, red.gram[t][t]);
    }
    check_invariant(chosen.size() == r, "hermitian_scale: reduced vectors do not span");
    out.Q.assign(r, std::vector<QVec>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < r; ++c) out.Q[i][c] = chosen[c][i];
    out.scaled.assign(r, std::vector<QVec>(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) out.scaled[a][b] = padded(form(chosen[a], chosen[b]), d);
    out.ledger.push_back({"max trace of the reduced diagonal", out.entry_bound});
    return out;
}

} // namespace smallpoint
