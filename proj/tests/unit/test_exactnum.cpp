#include "smallpoint/exactnum/factor.hpp"
#include "smallpoint/exactnum/ran.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallpoint;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long v : c) p.emplace_back(v);
    trim(p);
    return p;
}

RAN sqrt_of(long n) {
    auto r = isolate_real_roots(zp({-n, 0, 1}));
    return r.back();
}

/* product of factors, with multiplicity, equals the input up to sign */
ZPoly expand(const std::vector<std::pair<ZPoly, int>>& fs) {
    ZPoly acc{Int(1)};
    for (auto& [f, m] : fs)
        for (int i = 0; i < m; ++i) acc = pmul(acc, f);
    return acc;
}

} // namespace

TEST(Resultant, PaddedMatchesSylvesterDeterminant) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 5), pad(0, 2);
    for (int it = 0; it < 300; ++it) {
        QPoly u, v;
        int du = deg(rng), dv = deg(rng);
        for (int i = 0; i <= du; ++i) u.emplace_back(coef(rng));
        for (int i = 0; i <= dv; ++i) v.emplace_back(coef(rng));
        trim(u);
        trim(v);
        int d = std::max(0, degree(u)) + pad(rng), e = std::max(0, degree(v)) + pad(rng);
        EXPECT_EQ(resultant_padded(u, v, d, e), sylvester_determinant(u, v, d, e));
    }
}

TEST(Resultant, SmallCases) {
    QPoly a{Rat(-1), Rat(1)}, b{Rat(1), Rat(1)};
    EXPECT_EQ(resultant_padded(a, b, 1, 1), Rat(2));
    EXPECT_EQ(resultant_padded(b, a, 2, 2), Rat(0));
    QPoly c{Rat(-2), Rat(2)};
    EXPECT_EQ(resultant_padded(a, c, 1, 1), Rat(0));
}

TEST(Factor, KnownFactorisations) {
    // (x^2 - 2)(x^2 - 3)(x + 1)
    ZPoly f = pmul(pmul(zp({-2, 0, 1}), zp({-3, 0, 1})), zp({1, 1}));
    auto fs = factor_squarefree(f);
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(fs[0], zp({1, 1}));
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
    EXPECT_TRUE(is_irreducible(zp({1, 0, -10, 0, 1})));
    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
    EXPECT_EQ(factor_squarefree(zp({4, 0, 0, 0, 1})).size(), 2u);
}

TEST(Factor, RandomProductsRecovered) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-6, 6), deg(1, 4), count(1, 3);
    for (int it = 0; it < 60; ++it) {
        ZPoly f{Int(1)};
        int k = count(rng);
        for (int j = 0; j < k; ++j) {
            ZPoly g;
            int d = deg(rng);
            for (int i = 0; i < d; ++i) g.emplace_back(coef(rng));
            g.emplace_back(1 + std::abs(coef(rng)));
            trim(g);
            f = pmul(f, g);
        }
        auto fs = factor_over_q(f);
        ZPoly back = expand(fs);
        ZPoly pf = primitive_part(f);
        EXPECT_EQ(primitive_part(back), pf);
        for (auto& [g, m] : fs) EXPECT_TRUE(is_irreducible(g));
    }
}

TEST(Isolation, Examples) {
    auto r = isolate_real_roots(zp({-2, 0, 1}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_GE(r[0].isolator().lo(), Rat(-2));
    EXPECT_LE(r[0].isolator().hi(), Rat(-1));
    EXPECT_GE(r[1].isolator().lo(), Rat(1));
    EXPECT_LE(r[1].isolator().hi(), Rat(2));
    EXPECT_TRUE(isolate_real_roots(zp({1, 0, 1})).empty());
    auto z = isolate_real_roots(zp({0, 0, 0, 1}));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_TRUE(z[0].is_zero());
    EXPECT_THROW(isolate_real_roots(ZPoly{}), input_error);
}

TEST(Isolation, SturmCountMatchesSampling) {
    // (x-1)(x-2)(x+3)(x^2-5): sign changes on a fine grid vs Sturm counts
    ZPoly p = pmul(pmul(pmul(zp({-1, 1}), zp({-2, 1})), zp({3, 1})), zp({-5, 0, 1}));
    auto seq = sturm_sequence(p);
    for (int a = -8; a < 8; ++a) {
        Rat lo(a * 2 + 1, 4), hi(a * 2 + 7, 4);
        // simple roots: sign changes inside, plus a root sitting on the right end
        int changes = 0;
        int prev = sign_at(p, lo);
        for (int k = 1; k <= 4000; ++k) {
            Rat x = lo + (hi - lo) * Rat(k, 4000);
            int s = sign_at(p, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
        int at_hi = sign_at(p, hi) == 0 ? 1 : 0;
        EXPECT_EQ(sturm_count(seq, lo, hi), changes + at_hi);
    }
}

TEST(Ran, ArithmeticExamples) {
    RAN s2 = sqrt_of(2);
    EXPECT_EQ(s2 * s2, RAN(2));
    RAN one_plus = RAN(1) + s2;
    EXPECT_EQ(one_plus.minpoly(), zp({-1, -2, 1}));
    EXPECT_EQ(s2 + RAN(0), s2);
    EXPECT_EQ(ran_sign(RAN(1) - s2), -1);
    EXPECT_EQ(ran_sign(s2), 1);
    EXPECT_EQ(ran_sign(RAN(0)), 0);
    EXPECT_THROW(s2 / RAN(0), input_error);
    RAN half_s2 = s2 / RAN(2);
    EXPECT_EQ(s2 * half_s2, RAN(1));
    RAN s3 = sqrt_of(3);
    RAN sum = s2 + s3;
    EXPECT_EQ(sum.minpoly(), zp({1, 0, -10, 0, 1}));
    EXPECT_EQ(sum - s3, s2);
    EXPECT_EQ((s2 * s3) / s3, s2);
}

TEST(Ran, FieldLawsOnRandomTriples) {
    std::vector<RAN> pool{sqrt_of(2), sqrt_of(3), RAN(Rat(1, 3)), RAN(-2), -sqrt_of(5)};
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, int(pool.size()) - 1);
    for (int it = 0; it < 6; ++it) {
        const RAN &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Ran, RefineContractAndMonotonicity) {
    RAN s2 = sqrt_of(2);
    DyadicInterval wide = refine(s2, Rat(1));
    DyadicInterval tight = refine(s2, Rat(1, 100));
    EXPECT_LE(tight.width(), Rat(1, 100));
    EXPECT_TRUE(tight.subset_of(wide) || wide.width() <= Rat(1));
    EXPECT_LT(tight.lo() * tight.lo(), Rat(2));
    EXPECT_GT(tight.hi() * tight.hi(), Rat(2));
    DyadicInterval h = refine(RAN(Rat(1, 2)), Rat(1, 100));
    EXPECT_EQ(h.lo(), Rat(1, 2));
    EXPECT_EQ(h.hi(), Rat(1, 2));
}

TEST(Ran, EnclosureOfSumContainsIsolator) {
    RAN a = sqrt_of(2), b = sqrt_of(7);
    DyadicInterval Ia = a.refine(Rat(1, 1000)), Ib = b.refine(Rat(1, 1000));
    RAN s = a * b;
    DyadicInterval prod = Ia * Ib;
    DyadicInterval Is = s.refine(Rat(1, 1000000));
    EXPECT_TRUE(Is.overlaps(prod));
    EXPECT_TRUE(prod.contains(Is.mid()));
}
