#include "smallpoint/exactnum/order.hpp"

#include <algorithm>
#include <map>

namespace smallpoint {

namespace {

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Int modn(const Int& x, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const Int& v) { return modn(v * v + c, n); };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = modn(q * abs_int(x - y), n);
                }
                g = gcd_int(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_int(abs_int(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho(n);
    factor_rec(d, out);
    factor_rec(exact_div(n, d), out);
}

QMat identity_basis(int n) { return qidentity(std::size_t(n)); }

// structure constants: T[i][j] = coordinates of w_i * w_j in the basis
std::vector<std::vector<ZVec>> mult_table(const ZPoly& m, const QMat& B, const QMat& Binv) {
    std::size_t n = B.size();
    std::vector<std::vector<ZVec>> T(n, std::vector<ZVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            QVec c = qmatvec(qtranspose(Binv), nf_mul(m, B[i], B[j]));
            ZVec z;
            for (auto& x : c) {
                check_invariant(x.get_den() == 1, "order basis is not closed under multiplication");
                z.push_back(x.get_num());
            }
            T[i][j] = z;
            T[j][i] = z;
        }
    return T;
}

ZVec mul_coords(const std::vector<std::vector<ZVec>>& T, const ZVec& a, const ZVec& b, const Int& p) {
    std::size_t n = a.size();
    ZVec r(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Int ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += ab * T[i][j][k];
        }
    }
    if (p != 0)
        for (auto& x : r) x = modn(x, p);
    return r;
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(const Int& n0) {
    if (n0 == 0) throw input_error("cannot factor zero");
    Int n = abs_int(n0);
    std::map<Int, int> out;
    for (unsigned long p = 2; p < 10000 && Int(p) * Int(p) <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            n /= p;
        }
    }
    factor_rec(n, out);
    return {out.begin(), out.end()};
}

QVec nf_mul(const ZPoly& m, const QVec& a, const QVec& b) {
    std::size_t n = std::size_t(degree(m));
    QVec prod(2 * n, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    for (std::size_t k = prod.size(); k-- > n;) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        for (std::size_t t = 0; t <= n; ++t) prod[k - n + t] -= c * Rat(m[t]);
    }
    prod.resize(n);
    return prod;
}

std::vector<Int> power_traces(const ZPoly& m, int count) {
    int n = degree(m);
    std::vector<Int> s(std::size_t(std::max(count, 1)), Int(0));
    s[0] = n;
    auto a = [&](int i) { return (i >= 0 && i <= n) ? m[i] : Int(0); };
    for (int k = 1; k < count; ++k) {
        Int acc = 0;
        if (k <= n) acc = k * a(n - k);
        for (int i = 1; i <= std::min(k - 1, n); ++i) acc += a(n - i) * s[k - i];
        s[k] = -acc;
    }
    return s;
}

Rat nf_trace(const ZPoly& m, const QVec& a) {
    auto s = power_traces(m, degree(m));
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * Rat(s[i]);
    return t;
}

Rat lattice_discriminant(const ZPoly& m, const QMat& basis) {
    std::size_t n = basis.size();
    QMat g(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = nf_trace(m, nf_mul(m, basis[i], basis[j]));
    return qdet(g);
}

Int poly_discriminant(const ZPoly& m) {
    Rat d = lattice_discriminant(m, identity_basis(degree(m)));
    return d.get_num();
}

QMat lattice_hnf(const QMat& gens) {
    Int den;
    ZMat z = clear_denominators(gens, den);
    ZMat h = hnf_rows(z);
    QMat r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        for (auto& x : h[i]) r[i].push_back(Rat(x, den));
    for (auto& row : r)
        for (auto& x : row) x.canonicalize();
    return r;
}

Rat lattice_volume(const QMat& basis) { return abs_rat(qdet(basis)); }

QVec coords_in(const QMat& basis, const QVec& v) {
    QVec x;
    if (!qsolve(qtranspose(basis), v, x)) throw invariant_error("coords_in: vector outside the span");
    return x;
}

bool lattice_contains(const QMat& basis, const QVec& v) {
    QVec x;
    if (!qsolve(qtranspose(basis), v, x)) return false;
    for (auto& c : x)
        if (c.get_den() != 1) return false;
    return true;
}

QMat p_maximal_order(const ZPoly& m, const QMat& order_basis, const Int& p) {
    int n = degree(m);
    QMat B = lattice_hnf(order_basis);
    check_invariant(int(B.size()) == n, "p_maximal_order: basis is not of full rank");
    Int q = p;
    while (q < n) q *= p;
    for (int round = 0; round < 64; ++round) {
        QMat Binv = qinverse(B);
        auto T = mult_table(m, B, Binv);
        // radical: kernel of x -> x^q on O/pO
        ZMat A(n);
        for (int i = 0; i < n; ++i) {
            ZVec e(n, Int(0)), acc(n, Int(0));
            e[i] = 1;
            // start from 1 in O-coordinates
            QVec one_pb(n, Rat(0));
            one_pb[0] = 1;
            QVec one = qmatvec(qtranspose(Binv), one_pb);
            for (int k = 0; k < n; ++k) acc[k] = one[k].get_num();
            Int ex = q;
            ZVec base = e;
            while (ex > 0) {
                if (mpz_odd_p(ex.get_mpz_t())) acc = mul_coords(T, acc, base, p);
                ex >>= 1;
                if (ex > 0) base = mul_coords(T, base, base, p);
            }
            A[i] = acc;
        }
        auto ker = kernel_mod_p(ztranspose(A), p);
        ZMat igen = ker;
        for (int i = 0; i < n; ++i) {
            ZVec e(n, Int(0));
            e[i] = p;
            igen.push_back(e);
        }
        ZMat I = hnf_rows(igen);
        QMat Iinv = qinverse(to_qmat(I));
        // U = {x in O : x I subset p I}
        ZMat M(n);
        for (int i = 0; i < n; ++i) {
            ZVec e(n, Int(0));
            e[i] = 1;
            for (int j = 0; j < n; ++j) {
                ZVec prod = mul_coords(T, e, I[j], Int(0));
                QVec pq(prod.begin(), prod.end());
                QVec c = qmatvec(qtranspose(Iinv), pq);
                for (auto& x : c) {
                    check_invariant(x.get_den() == 1, "p_maximal_order: radical is not an ideal");
                    M[i].push_back(modn(x.get_num(), p));
                }
            }
        }
        auto uker = kernel_mod_p(ztranspose(M), p);
        QMat gens;
        for (const auto& u : uker) {
            QVec v(n, Rat(0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) v[k] += Rat(u[i], p) * B[i][k];
            gens.push_back(v);
        }
        for (int i = 0; i < n; ++i) gens.push_back(B[i]);
        QMat B2 = lattice_hnf(gens);
        if (lattice_volume(B2) == lattice_volume(B)) return B;
        B = B2;
    }
    throw budget_exhausted("p_maximal_order: too many enlargement rounds");
}

QMat maximal_order(const ZPoly& m) {
    int n = degree(m);
    QMat B = identity_basis(n);
    if (n == 1) return B;
    Int d = poly_discriminant(m);
    for (const auto& [p, e] : factor_integer(d))
        if (e >= 2) B = p_maximal_order(m, B, p);
    return B;
}

} // namespace smallpoint
