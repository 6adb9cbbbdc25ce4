#include "smallpoint/exactnum/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace smallpoint {

namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>; // coefficients mod p, lowest first

struct ModP {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 r = a + b; return r >= p ? r - p : r; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
    u64 pw(u64 a, u64 e) const {
        u64 r = 1;
        while (e) { if (e & 1) r = mul(r, a); a = mul(a, a); e >>= 1; }
        return r;
    }
    u64 inv(u64 a) const { return pw(a, p - 2); }

    void trim(MPoly& a) const { while (!a.empty() && a.back() == 0) a.pop_back(); }

    MPoly from(const ZPoly& f) const {
        MPoly r(f.size());
        Int P(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < f.size(); ++i) {
            Int c;
            mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), P.get_mpz_t());
            r[i] = c.get_ui();
        }
        trim(r);
        return r;
    }
    MPoly mulp(const MPoly& a, const MPoly& b) const {
        if (a.empty() || b.empty()) return {};
        MPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }
    MPoly subp(const MPoly& a, const MPoly& b) const {
        MPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    void divrem(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r) const {
        r = a;
        q.clear();
        if (r.size() < b.size()) return;
        q.assign(r.size() - b.size() + 1, 0);
        u64 il = inv(b.back());
        for (int k = int(r.size() - b.size()); k >= 0; --k) {
            u64 c = mul(r[k + b.size() - 1], il);
            q[k] = c;
            if (!c) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
        }
        r.resize(b.size() - 1);
        trim(r);
        trim(q);
    }
    MPoly rem(const MPoly& a, const MPoly& b) const { MPoly q, r; divrem(a, b, q, r); return r; }
    MPoly quo(const MPoly& a, const MPoly& b) const { MPoly q, r; divrem(a, b, q, r); return q; }
    MPoly monic(const MPoly& a) const {
        if (a.empty()) return a;
        u64 il = inv(a.back());
        MPoly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], il);
        return r;
    }
    MPoly gcd(MPoly a, MPoly b) const {
        while (!b.empty()) { MPoly r = rem(a, b); a = std::move(b); b = std::move(r); }
        return monic(a);
    }
    MPoly deriv(const MPoly& a) const {
        if (a.size() <= 1) return {};
        MPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    /* s*a + t*b = 1 (a, b coprime) */
    void xgcd(const MPoly& a, const MPoly& b, MPoly& s, MPoly& t) const {
        MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            MPoly q, r;
            divrem(r0, r1, q, r);
            MPoly s2 = subp(s0, mulp(q, s1)), t2 = subp(t0, mulp(q, t1));
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        u64 il = inv(r0.back());
        s.resize(s0.size());
        for (std::size_t i = 0; i < s0.size(); ++i) s[i] = mul(s0[i], il);
        t.resize(t0.size());
        for (std::size_t i = 0; i < t0.size(); ++i) t[i] = mul(t0[i], il);
        trim(s);
        trim(t);
    }

    /* Berlekamp matrix Q with rows x^{ip} mod f */
    std::vector<MPoly> berlekamp_rows(const MPoly& f) const {
        std::size_t n = f.size() - 1;
        std::vector<MPoly> rows(n);
        // x^p mod f by repeated squaring
        MPoly xp{0, 1}, base{0, 1}, acc{1};
        u64 e = p;
        while (e) {
            if (e & 1) acc = rem(mulp(acc, base), f);
            base = rem(mulp(base, base), f);
            e >>= 1;
        }
        xp = acc;
        MPoly cur{1};
        for (std::size_t i = 0; i < n; ++i) {
            rows[i] = cur;
            rows[i].resize(n, 0);
            cur = rem(mulp(cur, xp), f);
        }
        return rows;
    }

    /* basis of {g : g^p = g mod f} */
    std::vector<MPoly> berlekamp_kernel(const MPoly& f) const {
        std::size_t n = f.size() - 1;
        auto rows = berlekamp_rows(f);
        // left kernel of (Q - I): solve M v = 0 with M = (Q - I)^T
        std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[j][i] = sub(rows[i][j], i == j ? 1 : 0);
        std::vector<int> pivcol;
        std::size_t r = 0;
        std::vector<int> where(n, -1);
        for (std::size_t c = 0; c < n && r < n; ++c) {
            std::size_t piv = r;
            while (piv < n && m[piv][c] == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[piv], m[r]);
            u64 il = inv(m[r][c]);
            for (auto& x : m[r]) x = mul(x, il);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || m[i][c] == 0) continue;
                u64 f2 = m[i][c];
                for (std::size_t k = 0; k < n; ++k) m[i][k] = sub(m[i][k], mul(f2, m[r][k]));
            }
            where[c] = int(r);
            ++r;
        }
        std::vector<MPoly> basis;
        for (std::size_t c = 0; c < n; ++c) {
            if (where[c] >= 0) continue;
            MPoly v(n, 0);
            v[c] = 1;
            for (std::size_t c2 = 0; c2 < n; ++c2)
                if (where[c2] >= 0) v[c2] = sub(0, m[where[c2]][c]);
            trim(v);
            basis.push_back(v);
        }
        return basis;
    }

    std::vector<MPoly> factor(const MPoly& fmonic) const {
        auto basis = berlekamp_kernel(fmonic);
        std::vector<MPoly> facs{fmonic};
        std::size_t k = basis.size();
        for (const auto& v : basis) {
            if (facs.size() == k) break;
            if (v.size() <= 1) continue;
            for (u64 s = 0; s < p && facs.size() < k; ++s) {
                MPoly vs = v;
                vs[0] = sub(vs[0], s);
                trim(vs);
                std::vector<MPoly> next;
                for (const auto& u : facs) {
                    if (u.size() <= 2) { next.push_back(u); continue; }
                    MPoly g = gcd(u, vs);
                    if (g.size() > 1 && g.size() < u.size()) {
                        next.push_back(g);
                        next.push_back(monic(quo(u, g)));
                    } else {
                        next.push_back(u);
                    }
                }
                facs = std::move(next);
            }
        }
        return facs;
    }
};

bool is_prime_small(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- integer polynomial helpers modulo m (nonnegative residues) ---

ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

ZPoly zsymmod(const ZPoly& a, const Int& m) {
    Int half = m / 2;
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
        if (r[i] > half) r[i] -= m;
    }
    trim(r);
    return r;
}

/* division by a monic polynomial modulo m */
void zdivrem_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = zmod(a, m);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, Int(0));
    for (int k = int(r.size() - b.size()); k >= 0; --k) {
        Int c = r[k + b.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[k + j] -= c * b[j];
            mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
        }
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
}

ZPoly from_mod(const MPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    return r;
}

/*
 * Quadratic Hensel lifting of f = g*h (h monic) from modulus p to a modulus
 * M = p^(2^j) >= bound. Returns (g, h) modulo M.
 */
void hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, const ModP& mp, const Int& target,
                 ZPoly& gout, ZPoly& hout, Int& M) {
    MPoly sm, tm;
    mp.xgcd(mp.from(g), mp.from(h), sm, tm);
    ZPoly s = from_mod(sm), t = from_mod(tm);
    Int m(static_cast<unsigned long>(mp.p));
    while (m < target) {
        Int m2 = m * m;
        ZPoly e = zmod(psub(f, pmul(g, h)), m2);
        ZPoly q, r;
        zdivrem_monic(pmul(s, e), h, m2, q, r);
        ZPoly gs = zmod(padd(g, padd(pmul(t, e), pmul(q, g))), m2);
        ZPoly hs = zmod(padd(h, r), m2);
        ZPoly b = zmod(psub(padd(pmul(s, gs), pmul(t, hs)), ZPoly{Int(1)}), m2);
        ZPoly c, d;
        zdivrem_monic(pmul(s, b), hs, m2, c, d);
        ZPoly ss = zmod(psub(s, d), m2);
        ZPoly ts = zmod(psub(t, padd(pmul(t, b), pmul(c, gs))), m2);
        g = std::move(gs); h = std::move(hs); s = std::move(ss); t = std::move(ts);
        m = m2;
    }
    gout = g;
    hout = h;
    M = m;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f0) {
    ZPoly f = primitive_part(f0);
    int n = degree(f);
    if (n <= 1) return {f};

    // choose a prime giving few modular factors
    u64 best_p = 0;
    std::size_t best_r = ~std::size_t(0);
    int tried = 0;
    for (u64 p = 3; tried < 6 && p < 10000; p += 2) {
        if (!is_prime_small(p)) continue;
        ModP mp{p};
        MPoly fm = mp.from(f);
        if (int(fm.size()) != n + 1) continue;
        MPoly g = mp.gcd(fm, mp.deriv(fm));
        if (g.size() > 1) continue;
        ++tried;
        std::size_t r = mp.berlekamp_kernel(mp.monic(fm)).size();
        if (r < best_r) { best_r = r; best_p = p; }
        if (r == 1) break;
    }
    if (best_p == 0) throw invariant_error("factor: no suitable prime");
    if (best_r == 1) return {f};
    if (int(best_r) > max_modular_factors)
        throw budget_exhausted("factorization: too many modular factors");

    ModP mp{best_p};
    std::vector<MPoly> mf = mp.factor(mp.monic(mp.from(f)));
    check_invariant(mf.size() == best_r, "factor: Berlekamp split incomplete");
    std::sort(mf.begin(), mf.end(), [](const MPoly& a, const MPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });

    // coefficient bound for factors of lc * f
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int B = (isqrt(norm2) + 1) * pow_int(Int(2), n) * abs_int(lead(f));
    Int target = 2 * B + 1;

    // sequential lifting: f = lc * u1 * ... * ur
    std::vector<ZPoly> lifted;
    ZPoly rest = f;
    Int M;
    {
        Int P(static_cast<unsigned long>(best_p));
        Int mtest = P;
        while (mtest < target) mtest *= mtest;
        M = mtest;
    }
    for (std::size_t i = 0; i + 1 < mf.size(); ++i) {
        ZPoly h = from_mod(mf[i]);
        // g = lc * prod of the remaining modular factors
        MPoly gm{mp.from(ZPoly{lead(f)})};
        for (std::size_t j = i + 1; j < mf.size(); ++j) gm = mp.mulp(gm, mf[j]);
        ZPoly gl, hl;
        Int Mi;
        hensel_lift(zmod(rest, M), from_mod(gm), h, mp, target, gl, hl, Mi);
        check_invariant(Mi == M, "factor: inconsistent lifting modulus");
        lifted.push_back(hl);
        rest = gl;
    }
    // the last factor: make monic modulo M
    {
        Int lc = lead(zmod(rest, M));
        Int inv;
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
        lifted.push_back(zmod(pscale(rest, inv), M));
    }

    // recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly cur = f;
    for (int s = 1; 2 * s <= int(alive.size());) {
        bool found = false;
        std::vector<int> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        do {
            ZPoly g{lead(cur)};
            for (int idx : comb) g = zmod(pmul(g, lifted[alive[idx]]), M);
            g = zsymmod(g, M);
            if (g.empty()) continue;
            g = primitive_part(g);
            ZPoly q;
            if (zdivides(g, cur, &q)) {
                result.push_back(g);
                cur = primitive_part(q);
                std::vector<int> next;
                for (int i = 0, k = 0; i < int(alive.size()); ++i) {
                    if (k < s && comb[k] == i) { ++k; continue; }
                    next.push_back(alive[i]);
                }
                alive = std::move(next);
                found = true;
                break;
            }
        } while (next_combination(comb, int(alive.size())));
        if (!found) ++s;
    }
    if (degree(cur) >= 1) result.push_back(primitive_part(cur));
    std::sort(result.begin(), result.end(), poly_less);
    return result;
}

} // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    if (f.empty()) throw input_error("zero polynomial has no root set");
    ZPoly g = primitive_part(f);
    if (degree(g) < 1) return {};
    std::vector<ZPoly> out;
    // pull out powers of x
    if (g[0] == 0) {
        out.push_back(ZPoly{Int(0), Int(1)});
        std::size_t k = 0;
        while (g[k] == 0) ++k;
        g.erase(g.begin(), g.begin() + k);
    }
    if (degree(g) >= 1) {
        auto fs = zassenhaus(g);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<std::pair<ZPoly, int>> factor_over_q(const ZPoly& f) {
    if (f.empty()) throw input_error("cannot factor the zero polynomial");
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly a = primitive_part(f);
    // Yun's squarefree decomposition
    int mult = 1;
    ZPoly b = zgcd(a, zderiv(a));
    ZPoly c = degree(a) >= 1 ? zdiv_exact(a, b) : ZPoly{};
    while (degree(c) >= 1) {
        ZPoly y = zgcd(c, b);
        ZPoly z = zdiv_exact(c, y);
        if (degree(z) >= 1)
            for (auto& q : factor_squarefree(z)) out.emplace_back(q, mult);
        c = y;
        b = zdiv_exact(b, y);
        ++mult;
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return poly_less(x.first, y.first) || (!poly_less(y.first, x.first) && x.second < y.second);
    });
    return out;
}

bool is_irreducible(const ZPoly& f) {
    if (degree(f) < 1) return false;
    ZPoly g = primitive_part(f);
    if (degree(zgcd(g, zderiv(g))) >= 1) return false;
    return factor_squarefree(g).size() == 1;
}

} // namespace smallpoint
