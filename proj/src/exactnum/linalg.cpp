#include "smallpoint/exactnum/linalg.hpp"

#include <algorithm>

namespace smallpoint {

ZMat zidentity(std::size_t n) {
    ZMat r(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

QMat qidentity(std::size_t n) {
    QMat r(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

QMat to_qmat(const ZMat& a) {
    QMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) r[i].emplace_back(x);
    return r;
}

ZMat zmatmul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

QMat qmatmul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

QVec qmatvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

ZMat ztranspose(const ZMat& a) {
    if (a.empty()) return {};
    ZMat r(a[0].size(), ZVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

QMat qtranspose(const QMat& a) {
    if (a.empty()) return {};
    QMat r(a[0].size(), QVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Int zdet(const ZMat& a0) {
    std::size_t n = a0.size();
    if (n == 0) return 1;
    ZMat a = a0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Gaussian elimination to reduced row echelon form; returns pivot columns.
static std::vector<std::size_t> rref(QMat& a, int* swaps = nullptr) {
    std::vector<std::size_t> piv;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (swaps) ++*swaps;
        }
        Rat inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

Rat qdet(const QMat& a0) {
    std::size_t n = a0.size();
    QMat a = a0;
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            d = -d;
        }
        d *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return d;
}

std::size_t qrank(const QMat& a0) {
    QMat a = a0;
    return rref(a).size();
}

QMat qinverse(const QMat& a) {
    std::size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw input_error("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw input_error("singular matrix");
    QMat r(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

std::vector<QVec> qkernel(const QMat& a0) {
    QMat a = a0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    auto piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool qsolve(const QMat& a, const QVec& b, QVec& x) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return false;
    x.assign(cols, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return true;
}

ZMat hnf_rows(const ZMat& a0) {
    ZMat a = a0;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-combine rows r.. into row r at column c
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (a[r][c] == 0) {
                std::swap(a[r], a[i]);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
            Int u = exact_div(a[r][c], g), v = exact_div(a[i][c], g);
            for (std::size_t j = c; j < cols; ++j) {
                Int x = a[r][j], y = a[i][j];
                a[r][j] = s * x + t * y;
                a[i][j] = u * y - v * x;
            }
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    a.resize(r);
    return a;
}

std::vector<Int> smith_diagonal(const ZMat& a0) {
    ZMat a = hnf_rows(a0);
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero entry of minimal absolute value in the lower-right block
        bool any = false;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!any || abs_int(a[i][j]) < abs_int(a[bi][bj]))) {
                    any = true;
                    bi = i;
                    bj = j;
                }
        if (!any) break;
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: fold any entry not divisible by the pivot into row t
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            clean = false;
                            break;
                        }
            }
        }
        diag.push_back(abs_int(a[t][t]));
        ++t;
    }
    return diag;
}

static Int modp(const Int& x, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
}

std::vector<ZVec> kernel_mod_p(const ZMat& a0, const Int& p) {
    std::size_t rows = a0.size(), cols = rows ? a0[0].size() : 0;
    ZMat a(rows, ZVec(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = modp(a0[i][j], p);
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t q = r;
        while (q < rows && a[q][c] == 0) ++q;
        if (q == rows) continue;
        std::swap(a[q], a[r]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[r][j] = modp(a[r][j] * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Int f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = modp(a[i][j] - f * a[r][j], p);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<ZVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        ZVec v(cols, Int(0));
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = modp(-a[k][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

ZMat clear_denominators(const QMat& a, Int& den) {
    den = 1;
    for (const auto& row : a)
        for (const auto& x : row) den = lcm_int(den, x.get_den());
    ZMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) r[i].push_back(Rat(x * Rat(den)).get_num());
    return r;
}

} // namespace smallpoint
