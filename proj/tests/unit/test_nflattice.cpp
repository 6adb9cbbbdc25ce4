#include "smallpoint/nflattice/nflattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallpoint;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long x : c) p.push_back(Int(x));
    return p;
}

Int smith_index(const QMat& m) {
    ZMat z;
    for (const auto& row : m) {
        ZVec r;
        for (const auto& x : row) {
            EXPECT_EQ(x.get_den(), 1);
            r.push_back(x.get_num());
        }
        z.push_back(r);
    }
    Int prod = 1;
    auto d = smith_diagonal(z);
    EXPECT_EQ(d.size(), m.size());
    for (const auto& x : d) prod *= x;
    return prod;
}

// squared length of the shortest nonzero vector by brute force over a box
Rat shortest_sq(const ZMat& b, long box) {
    std::size_t n = b.size(), m = b[0].size();
    Rat best = -1;
    std::vector<long> c(n, -box);
    while (true) {
        bool nz = false;
        for (long x : c) nz = nz || x != 0;
        if (nz) {
            Rat s = 0;
            for (std::size_t k = 0; k < m; ++k) {
                Int v = 0;
                for (std::size_t i = 0; i < n; ++i) v += c[i] * b[i][k];
                s += Rat(v * v);
            }
            if (best < 0 || s < best) best = s;
        }
        std::size_t k = 0;
        while (k < n && ++c[k] > box) c[k++] = -box;
        if (k == n) break;
    }
    return best;
}

Rat sq_norm(const ZVec& v) {
    Rat s = 0;
    for (const auto& x : v) s += Rat(x * x);
    return s;
}

std::vector<NumberField> quadratic_fields(int max_abs_disc) {
    std::vector<NumberField> out;
    for (long D = -60; D <= 60; ++D) {
        if (D == 0 || D == 1) continue;
        bool squarefree = true;
        for (long p = 2; p * p <= std::abs(D); ++p)
            if (std::abs(D) % (p * p) == 0) squarefree = false;
        if (!squarefree) continue;
        long disc = (((D % 4) + 4) % 4 == 1) ? D : 4 * D;
        if (std::abs(disc) > max_abs_disc) continue;
        out.push_back(make_number_field(zp({-D, 0, 1})));
    }
    return out;
}

} // namespace

TEST(NFLattice, Fields) {
    auto g = make_number_field(zp({1, 0, 1}));
    EXPECT_EQ(g.disc, -4);
    EXPECT_EQ(g.complex_roots.size(), 1u);
    EXPECT_TRUE(g.real_roots.empty());
    auto f5 = make_number_field(zp({-5, 0, 1}));
    EXPECT_EQ(f5.disc, 5);
    EXPECT_TRUE(f5.totally_real());
    EXPECT_EQ(make_number_field(zp({5, 0, 1})).disc, -20);
    auto c = make_number_field(zp({-2, 0, 0, 1}));
    EXPECT_EQ(c.disc, -108);
    EXPECT_EQ(c.real_roots.size() + 2 * c.complex_roots.size(), 3u);
    // 2x^2 - 1 is rescaled to x^2 - 2
    auto s = make_number_field(zp({-1, 0, 2}));
    EXPECT_EQ(s.defining_poly, zp({-2, 0, 1}));
    EXPECT_EQ(s.disc, 8);
    EXPECT_THROW(make_number_field(zp({-1, 0, 1})), input_error);
    EXPECT_EQ(minkowski_bound(make_number_field(zp({5, 0, 1}))), 2);
    EXPECT_EQ(minkowski_bound(rational_field()), 1);
}

TEST(NFLattice, LLLExamples) {
    auto id = lll_reduce(zidentity(3));
    EXPECT_EQ(id.basis, zidentity(3));

    ZMat b{{Int(1), Int(0)}, {Int(4), Int(1)}};
    auto r = lll_reduce(b);
    EXPECT_LE(sq_norm(r.basis[0]), 2 * shortest_sq(b, 10));
    EXPECT_EQ(abs_int(zdet(r.transform)), 1);

    auto g = lll_reduce_gram(QMat{{Rat(5), Rat(4)}, {Rat(4), Rat(5)}});
    EXPECT_LE(std::max(g.gram[0][0], g.gram[1][1]), 5);
    EXPECT_EQ(abs_int(zdet(g.transform)), 1);

    EXPECT_THROW(lll_reduce(ZMat{{Int(1), Int(2)}, {Int(2), Int(4)}}), input_error);
}

TEST(NFLattice, LLLRandomAgainstBruteForce) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-20, 20);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + std::size_t(t % 3);
        ZMat b(n, ZVec(n));
        for (auto& row : b)
            for (auto& x : row) x = e(rng);
        if (zdet(b) == 0) continue;
        auto r = lll_reduce(b);
        EXPECT_EQ(abs_int(zdet(r.transform)), 1);
        EXPECT_EQ(zmatmul(r.transform, b), r.basis);
        // Lovasz + size reduction give |b1|^2 <= 2^(n-1) lambda1^2
        EXPECT_LE(sq_norm(r.basis[0]), Rat(1L << (n - 1)) * shortest_sq(r.basis, 3));
    }
}

TEST(NFLattice, MinkowskiExamples) {
    NFModuleLattice twoZ{{rational_field()}, {1}, {{Rat(2)}}};
    auto a = minkowski_reduce(twoZ);
    EXPECT_EQ(a.nu[0][0][0], QVec{Rat(1, 2)});
    EXPECT_EQ(a.index, 1);

    auto gauss = make_number_field(zp({1, 0, 1}));
    NFModuleLattice O{{gauss}, {1}, qidentity(2)};
    auto b = minkowski_reduce(O);
    EXPECT_EQ(b.index, 1);
    EXPECT_EQ(b.nu[0][0][0], (QVec{Rat(1), Rat(0)}));

    auto k = make_number_field(zp({5, 0, 1}));
    NFModuleLattice P{{k}, {1}, {{Rat(2), Rat(0)}, {Rat(1), Rat(1)}}};
    auto c = minkowski_reduce(P);
    EXPECT_LE(c.index, 2);
    EXPECT_EQ(c.index, smith_index(c.image));
    EXPECT_LE(Rat(c.index), c.bound);

    NFModuleLattice bad{{k}, {1}, {{Rat(2), Rat(0)}, {Rat(4), Rat(0)}}};
    EXPECT_THROW(minkowski_reduce(bad), input_error);
}

TEST(NFLattice, MinkowskiRandomLattices) {
    std::mt19937 rng(11);
    auto fields = quadratic_fields(200);
    std::uniform_int_distribution<int> e(-4, 4), den(1, 3);
    for (int t = 0; t < 30; ++t) {
        NFModuleLattice L;
        int shape = t % 3;
        const NumberField& F = fields[std::size_t(t * 7) % fields.size()];
        if (shape == 0) L = {{F}, {2}, {}};
        else if (shape == 1) L = {{F, fields[std::size_t(t * 3 + 1) % fields.size()]}, {1, 1}, {}};
        else L = {{rational_field(), F}, {1, 1}, {}};
        std::size_t N = L.ambient_dim();
        do {
            Rat s(1, den(rng));
            L.basis.assign(N, QVec(N));
            for (auto& row : L.basis)
                for (auto& x : row) x = Rat(e(rng)) * s;
        } while (qrank(L.basis) < N);
        auto r = minkowski_reduce(L);
        EXPECT_EQ(r.index, smith_index(r.image));
        EXPECT_EQ(apply_blocks(L, r.nu, L.basis), r.image);
        EXPECT_LE(Rat(r.index), r.bound) << "trial " << t;
    }
}

TEST(NFLattice, SignElementExamples) {
    auto q = totally_real_sign_element(rational_field(), {1});
    EXPECT_EQ(q.zeta, QVec{Rat(1)});

    auto s2 = make_number_field(zp({-2, 0, 1}));
    // real_roots ascending: embedding 0 sends the generator to -sqrt2
    auto z = totally_real_sign_element(s2, {-1, 1});
    EXPECT_EQ(z.zeta, (QVec{Rat(0), Rat(1)}));
    EXPECT_EQ(*z.height.exact_power_value, RAN(2));

    auto s5 = make_number_field(zp({-5, 0, 1}));
    auto one = totally_real_sign_element(s5, {1, 1});
    EXPECT_EQ(one.zeta, (QVec{Rat(1), Rat(0)}));

    EXPECT_THROW(totally_real_sign_element(make_number_field(zp({1, 0, 1})), {1, 1}), input_error);
    EXPECT_THROW(totally_real_sign_element(s2, {1, 0}), input_error);
}

TEST(NFLattice, SignElementAllPatterns) {
    std::vector<NumberField> fields = {make_number_field(zp({-3, 0, 1})), make_number_field(zp({-1, -1, 1})),
                                       make_number_field(zp({1, -3, 0, 1})), make_number_field(zp({-1, -2, 1, 1}))};
    for (const auto& F : fields) {
        std::size_t d = std::size_t(F.degree);
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<int> signs;
            for (std::size_t j = 0; j < d; ++j) signs.push_back((mask >> j) & 1 ? -1 : 1);
            auto z = totally_real_sign_element(F, signs);
            for (std::size_t j = 0; j < d; ++j) EXPECT_EQ(z.embeddings[j].sign(), signs[j]);
            EXPECT_LE(z.height.upper, z.bound);
            // H^d <= prod max(1, |sigma|) for an algebraic integer
            EXPECT_LE(pow_rat(z.height.lower, d), z.ledger.back().second);
        }
    }
}

TEST(NFLattice, HermitianScale) {
    auto Q = rational_field();
    auto a = hermitian_scale(Q, {{QVec{Rat(4)}}});
    EXPECT_EQ(a.Q[0][0], QVec{Rat(1)});
    EXPECT_EQ(a.scaled[0][0], QVec{Rat(4)});

    auto b = hermitian_scale(Q, {{QVec{Rat(5)}, QVec{Rat(4)}}, {QVec{Rat(4)}, QVec{Rat(5)}}});
    for (const auto& row : b.scaled)
        for (const auto& x : row) EXPECT_LE(abs_rat(x[0]), 5);
    Rat dq = b.Q[0][0][0] * b.Q[1][1][0] - b.Q[0][1][0] * b.Q[1][0][0];
    Rat ds = b.scaled[0][0][0] * b.scaled[1][1][0] - b.scaled[0][1][0] * b.scaled[1][0][0];
    EXPECT_EQ(dq * dq, ds / 9);

    auto c = hermitian_scale(Q, {{QVec{Rat(1)}, QVec{Rat(0)}}, {QVec{Rat(0)}, QVec{Rat(1)}}});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_LE(abs_rat(c.scaled[i][j][0]), 1);

    EXPECT_THROW(hermitian_scale(Q, {{QVec{Rat(1)}, QVec{Rat(2)}}, {QVec{Rat(2)}, QVec{Rat(1)}}}), input_error);
}

TEST(NFLattice, HermitianScaleOverImaginaryQuadratic) {
    auto F = make_number_field(zp({1, 0, 1}));
    // [[2, 1+i], [1-i, 3]] has determinant 4 and positive diagonal
    FieldMatrix A{{QVec{Rat(2), Rat(0)}, QVec{Rat(1), Rat(1)}}, {QVec{Rat(1), Rat(-1)}, QVec{Rat(3), Rat(0)}}};
    auto h = hermitian_scale(F, A);
    auto det = [&](const FieldMatrix& m) {
        return nf_sub(nf_times(F, m[0][0], m[1][1]), nf_times(F, m[0][1], m[1][0]));
    };
    Rat nq = nf_norm_of(F, det(h.Q));
    EXPECT_EQ(nq * nq, nf_norm_of(F, det(h.scaled)) / nf_norm_of(F, det(A)));
    for (const auto& row : h.Q)
        for (const auto& x : row)
            for (const auto& c : to_integral_coords(F, x)) EXPECT_EQ(c.get_den(), 1);
    // entries are bounded by the ledger value at the complex place
    for (const auto& row : h.scaled)
        for (const auto& x : row) EXPECT_LE(x[0] * x[0] + x[1] * x[1], h.entry_bound * h.entry_bound);
}
