#include "smallpoint/heights/complex_roots.hpp"
#include "smallpoint/heights/heights.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace smallpoint;

namespace {

RAN pos_root(const ZPoly& m) {
    auto rs = isolate_real_roots(m);
    return rs.back();
}

// lower^k <= v <= upper^k
bool power_contains(const HeightEnclosure& h, unsigned k, const Rat& v) {
    return pow_rat(h.lower, k) <= v && v <= pow_rat(h.upper, k);
}

} // namespace

TEST(Heights, Rationals) {
    EXPECT_EQ(height_rational(Rat(1, 2)).upper, 2);
    EXPECT_EQ(height_rational(Rat(0)).upper, 1);
    EXPECT_EQ(height_rational(Rat(3)).upper, 3);
    EXPECT_EQ(height_rational(Rat(-7, 3)).lower, 7);
    EXPECT_TRUE(height_rational(Rat(5, 9)).exact);
    EXPECT_EQ(height_algebraic(RAN(Rat(1, 2)), Rat(1, 1000)).upper, 2);
}

TEST(Heights, Quadratics) {
    Rat tol(1, 1000000000);
    auto h = height_algebraic(pos_root({-2, 0, 1}), tol);
    EXPECT_TRUE(power_contains(h, 2, 2));
    EXPECT_LE(h.relative_width(), tol);
    ASSERT_TRUE(h.exact_power_value.has_value());
    EXPECT_EQ(*h.exact_power_value, RAN(2));

    // golden ratio: the Mahler measure is (1+sqrt5)/2 itself, H is its square root
    RAN phi = pos_root({-1, -1, 1});
    auto g = height_algebraic(phi, tol);
    EXPECT_EQ(*g.exact_power_value, phi);
    EXPECT_LE(pow_rat(g.lower, 2), Rat(16181, 10000));
    EXPECT_GE(pow_rat(g.upper, 2), Rat(16180, 10000));

    EXPECT_EQ(quadratic_mahler({1, 1, 1}), RAN(1));    // roots on the unit circle
    EXPECT_EQ(quadratic_mahler({5, 2, 3}), RAN(5));    // complex pair with |r|^2 = 5/3
    EXPECT_EQ(quadratic_mahler({-6, 1, 1}), RAN(6));   // roots 2 and -3
}

TEST(Heights, GraeffeMatchesProductsOfQuadratics) {
    // M is multiplicative, so products of quadratics have closed-form measures
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-6, 6), a(1, 4);
    Rat tol(1, 1000000000);
    for (int it = 0; it < 12; ++it) {
        ZPoly p{1};
        RAN M(1);
        for (int f = 0; f < 1 + it % 4; ++f) {
            ZPoly q{Int(c(rng)), Int(c(rng)), Int(a(rng))};
            if (q[0] == 0) q[0] = 1;
            p = zmul(p, q);
            M = M * quadratic_mahler(q);
        }
        auto e = mahler_measure(p, tol);
        EXPECT_LE(e.relative_width(), tol) << poly_to_string(p);
        EXPECT_LE(RAN(e.lower), M) << poly_to_string(p);
        EXPECT_GE(RAN(e.upper), M) << poly_to_string(p);
    }
}

TEST(Heights, CubicViaGraeffe) {
    // x^3 - 2: all roots have modulus 2^(1/3), so M = 2 and H = 2^(1/3)
    Rat tol(1, 1000000000);
    auto h = height_algebraic(pos_root({-2, 0, 0, 1}), tol);
    EXPECT_LE(h.relative_width(), tol);
    EXPECT_TRUE(power_contains(h, 3, 2));
}

TEST(Heights, Points) {
    Rat tol(1, 1000000);
    auto h = height_point(std::vector<RAN>{RAN(Rat(1, 2)), RAN(3)}, tol);
    EXPECT_TRUE(h.exact);
    EXPECT_EQ(h.upper, 6);
    EXPECT_EQ(height_point(std::vector<RAN>{RAN(0), RAN(0)}, tol).upper, 1);
    RAN s2 = pos_root({-2, 0, 1}), s3 = pos_root({-3, 0, 1});
    auto a = height_point(std::vector<RAN>{s2, RAN(0)}, tol), b = height_algebraic(s2, tol);
    EXPECT_EQ(a.lower, b.lower);
    EXPECT_EQ(a.upper, b.upper);

    // every embedding has |sqrt3| > |sqrt2| and both are integral: H^4 = 3^2
    auto c = height_point(std::vector<RAN>{s2, s3}, tol);
    EXPECT_TRUE(power_contains(c, 4, 9));
    EXPECT_LE(c.relative_width(), tol);
    // [1 : 1/sqrt2 : 1] = [sqrt2 : 1 : sqrt2]; the prime above 2 contributes nothing
    auto d = height_point(std::vector<RAN>{s2 / RAN(2), RAN(1)}, tol);
    EXPECT_TRUE(power_contains(d, 2, 2));
    // 1/2 * sqrt2 has a genuine finite contribution: [1 : sqrt2/4 : 1] = [4 : sqrt2 : 4], H^2 = 16 / 2
    auto f = height_point(std::vector<RAN>{s2 / RAN(4), RAN(1)}, tol);
    EXPECT_TRUE(power_contains(f, 2, 8));
}

TEST(Heights, Polynomials) {
    EXPECT_EQ(height_poly_rational(QPoly{4, 2}).upper, 2);
    EXPECT_EQ(height_poly_rational(QPoly{-2, 0, 1}).upper, 2);
    EXPECT_EQ(height_poly_rational(QPoly{0, 1, Rat(1, 3)}).upper, 3);
    EXPECT_THROW(height_poly_rational(QPoly{}), input_error);
    EXPECT_EQ(root_height_bound(QPoly{-2, 0, 1}), 4);
    EXPECT_EQ(root_height_bound(QPoly{-1, 1}), 1);
    EXPECT_EQ(root_height_bound(QPoly{-1, -1, 1}), 2);
    EXPECT_THROW(root_height_bound(QPoly{-1, 2}), input_error);

    // every real root of a random monic polynomial obeys the bound
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int it = 0; it < 20; ++it) {
        ZPoly f{Int(c(rng)), Int(c(rng)), Int(c(rng)), 1};
        Rat B = root_height_bound(to_qpoly(f));
        for (const auto& r : isolate_real_roots(f)) EXPECT_LE(height_algebraic(r, Rat(1, 1000)).upper, B);
    }
}

TEST(Heights, MultiplicativeProperties) {
    Rat tol(1, 100000000);
    RAN a = pos_root({-3, -1, 1}), b = pos_root({-5, 0, 2});
    auto ha = height_algebraic(a, tol), hb = height_algebraic(b, tol), hab = height_algebraic(a * b, tol);
    EXPECT_LE(hab.upper, ha.upper * hb.upper * (1 + tol));
    auto h3 = height_algebraic(a * a * a, tol);
    EXPECT_LE(h3.lower, pow_rat(ha.upper, 3) * (1 + 4 * tol));
    EXPECT_GE(h3.upper, pow_rat(ha.lower, 3) * (1 - 4 * tol));
}

TEST(ComplexRoots, CertifiedDiscs) {
    ZPoly p{1, 0, 0, 0, 0, 1}; // x^5 + 1
    auto roots = complex_roots(p);
    ASSERT_EQ(roots.size(), 5u);
    for (const auto& r : roots) {
        double re = (r.box.re.lo_d() + r.box.re.hi_d()) / 2, im = (r.box.im.lo_d() + r.box.im.hi_d()) / 2;
        EXPECT_NEAR(std::hypot(re, im), 1.0, 1e-12);
    }
}
