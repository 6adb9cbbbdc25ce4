#include "smallpoint/exactnum/interval.hpp"
#include "smallpoint/exactnum/numfield.hpp"
#include "smallpoint/exactnum/order.hpp"

#include <gtest/gtest.h>

using namespace smallpoint;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long v : c) p.emplace_back(v);
    trim(p);
    return p;
}

RAN positive_root(long a, long b, long c) { return isolate_real_roots(zp({c, b, a})).back(); }

} // namespace

TEST(LinAlg, DeterminantsAgree) {
    ZMat a{{2, 3, 1}, {4, 1, -3}, {0, 5, 7}};
    // cofactor expansion along the first row
    Int cof = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    EXPECT_EQ(zdet(a), cof);
    EXPECT_EQ(qdet(to_qmat(a)), Rat(cof));
    QMat inv = qinverse(to_qmat(a));
    EXPECT_EQ(qmatmul(inv, to_qmat(a)), qidentity(3));
}

TEST(LinAlg, SmithAndHermite) {
    ZMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto d = smith_diagonal(a);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], Int(2));
    EXPECT_EQ(d[1], Int(6));
    EXPECT_EQ(d[2], Int(12));
    ZMat h = hnf_rows(a);
    Int prod = 1;
    for (std::size_t i = 0; i < h.size(); ++i) prod *= h[i][i];
    EXPECT_EQ(prod, abs_int(zdet(a)));
}

TEST(LinAlg, KernelModP) {
    ZMat a{{1, 1, 0}, {0, 1, 1}};
    auto k = kernel_mod_p(a, Int(2));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (ZVec{1, 1, 1}));
}

TEST(IntegerFactor, SmallAndRho) {
    auto f = factor_integer(Int(-360));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], std::make_pair(Int(2), 3));
    Int big = Int("1000000007") * Int("998244353");
    auto g = factor_integer(big);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].first, Int("998244353"));
}

TEST(MaximalOrder, QuadraticAndDedekindCubic) {
    EXPECT_EQ(lattice_discriminant(zp({-5, 0, 1}), maximal_order(zp({-5, 0, 1}))), Rat(5));
    EXPECT_EQ(lattice_discriminant(zp({1, 0, 1}), maximal_order(zp({1, 0, 1}))), Rat(-4));
    EXPECT_EQ(lattice_discriminant(zp({-8, 0, 1}), maximal_order(zp({-8, 0, 1}))), Rat(8));
    EXPECT_EQ(lattice_discriminant(zp({3, 0, 1}), maximal_order(zp({3, 0, 1}))), Rat(-3));
    // x^3 + x^2 - 2x + 8: index 2 at a common index divisor, field discriminant -503
    ZPoly ded = zp({8, -2, 1, 1});
    EXPECT_EQ(poly_discriminant(ded), Int(-2012));
    EXPECT_EQ(lattice_discriminant(ded, maximal_order(ded)), Rat(-503));
}

TEST(NumberField, ElementToRealAlgebraic) {
    auto [f, s2] = field_of(positive_root(1, 0, -2));
    NFElem one_plus = NFElem(1) + s2;
    EXPECT_EQ(one_plus.to_ran().minpoly(), zp({-1, -2, 1}));
    EXPECT_EQ((s2 * s2).rational(), Rat(2));
    EXPECT_EQ(s2.inverse() * s2, NFElem(1));
    // generator of a non-monic minpoly: 2x^2 - 3 gives gamma = 2a with gamma^2 = 6
    auto [g, a] = field_of(positive_root(2, 0, -3));
    EXPECT_EQ(g->m, zp({-6, 0, 1}));
    EXPECT_EQ((a * a).rational(), Rat(3, 2));
}

TEST(NumberField, JoinOfQuadratics) {
    RAN r2 = positive_root(1, 0, -2), r3 = positive_root(1, 0, -3);
    auto [f2, e2] = field_of(r2);
    auto [f3, e3] = field_of(r3);
    FieldJoin j = join_fields(f2, f3);
    EXPECT_EQ(j.field->degree(), 4);
    NFElem a = embed(e2, j.image_a), b = embed(e3, j.image_b);
    EXPECT_EQ((a * a).rational(), Rat(2));
    EXPECT_EQ((b * b).rational(), Rat(3));
    EXPECT_EQ(a.to_ran(), r2);
    EXPECT_EQ(b.to_ran(), r3);
    EXPECT_EQ((a + b).to_ran(), r2 + r3);
}

TEST(NumberField, RealRootsOverQuadraticField) {
    auto [f, s2] = field_of(positive_root(1, 0, -2));
    // x^2 - 2 splits in Q(sqrt 2)
    UPoly<NFElem> h{NFElem(-2), NFElem(0), NFElem(1)};
    auto roots = real_roots_over(h, f);
    ASSERT_EQ(roots.size(), 2u);
    for (auto& r : roots) EXPECT_EQ(r.field->degree(), 2);
    // x^2 - sqrt2 has roots +-2^(1/4), degree 4 over Q
    UPoly<NFElem> h2{-s2, NFElem(0), NFElem(1)};
    auto r2 = real_roots_over(h2, f);
    ASSERT_EQ(r2.size(), 2u);
    for (auto& r : r2) {
        EXPECT_EQ(r.field->degree(), 4);
        EXPECT_EQ((r.root * r.root) - embed(s2, r.image_of_generator), NFElem(0));
    }
    // x^2 + sqrt2 has no real roots
    UPoly<NFElem> h3{s2, NFElem(0), NFElem(1)};
    EXPECT_TRUE(real_roots_over(h3, f).empty());
}

TEST(Interval, DirectedRoundingEncloses) {
    Interval a(Rat(1, 3), 64), b(Rat(2), 64);
    Interval s = (a * b).sqrt();
    // sqrt(2/3) squared must straddle 2/3
    EXPECT_LE(s.lo_rat() * s.lo_rat(), Rat(2, 3));
    EXPECT_GE(s.hi_rat() * s.hi_rat(), Rat(2, 3));
    Interval r = b.root(3);
    EXPECT_LE(r.lo_rat() * r.lo_rat() * r.lo_rat(), Rat(2));
    EXPECT_GE(r.hi_rat() * r.hi_rat() * r.hi_rat(), Rat(2));
}
