#include "smallpoint/cli/parse.hpp"
#include "smallpoint/realpoint/realpoint.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallpoint;

namespace {

QPolyN P(const std::string& s, std::size_t n = 0) { return parse_polynomial(s, n); }

AlgebraicSet S(std::vector<std::string> gens, std::size_t n) {
    std::vector<QPolyN> g;
    for (const auto& s : gens) g.push_back(P(s, n));
    return AlgebraicSet(n, g);
}

RAN sqrt_of(long a) {
    for (const auto& r : isolate_real_roots(ZPoly{Int(-a), Int(0), Int(1)}))
        if (r.sign() > 0) return r;
    throw std::runtime_error("no root");
}

// membership, independent height recomputation and the ledger product
void expect_found_on(const AlgebraicSet& V, const SearchOutcome& o) {
    ASSERT_EQ(o.status, SearchStatus::found) << o.reason;
    ASSERT_TRUE(o.certificate);
    EXPECT_TRUE(o.certificate->membership_checked);
    EXPECT_TRUE(verify_membership(o.certificate->coordinates, V));
    HeightEnclosure h = height_point(o.certificate->coordinates, Rat(1, 1000000));
    EXPECT_LE(h.upper, o.certificate->height.upper * Rat(1000001, 1000000));
    Rat prod = 1;
    for (const auto& [tag, b] : o.certificate->bound_ledger) {
        EXPECT_GE(b, 1) << tag;
        prod *= b;
    }
    EXPECT_LE(o.certificate->height.upper, prod * Rat(1000001, 1000000));
}

} // namespace

TEST(RealPoint, RepeatedRootSubset) {
    auto W = S({"x2^2 - x1"}, 2);
    auto R = repeated_root_subset(W, P("x2^2 - x1", 2));
    ASSERT_EQ(R.generators.size(), 2u);
    EXPECT_EQ(to_string(R.generators[1]), "2*x2");
    EXPECT_TRUE(verify_membership({RAN(0), RAN(0)}, R));
    EXPECT_FALSE(verify_membership({RAN(1), RAN(1)}, R));

    auto L = repeated_root_subset(S({"x2 - x1"}, 2), P("x2 - x1", 2));
    EXPECT_TRUE(L.trivially_empty());

    auto C = repeated_root_subset(S({"x1^2 + x2^2 - 1"}, 2), P("x2^2 + x1^2 - 1", 2));
    EXPECT_TRUE(verify_membership({RAN(1), RAN(0)}, C));
    EXPECT_TRUE(verify_membership({RAN(-1), RAN(0)}, C));
    EXPECT_FALSE(verify_membership({RAN(0), RAN(1)}, C));

    EXPECT_THROW(repeated_root_subset(W, P("2*x2^2 - x1", 2)), input_error);
}

TEST(RealPoint, RepeatedRootSkipsDerivativesVanishingOnSamples) {
    // on W = {x2 = 0}, g = x2^3: 3 x2^2 and 6 x2 vanish at every sample, so the constant 6 is used
    auto W = S({"x2"}, 2);
    auto g = P("x2^3", 2);
    auto R = repeated_root_subset(W, g, {{RAN(0), RAN(0)}, {RAN(1), RAN(0)}});
    EXPECT_EQ(to_string(R.generators.back()), "6");
    EXPECT_EQ(to_string(repeated_root_subset(W, g).generators.back()), "3*x2^2");
    // a sample off x2 = 0 stops the descent at once
    auto Q = repeated_root_subset(W, g, {{RAN(0), RAN(0)}, {RAN(0), RAN(1)}});
    EXPECT_EQ(to_string(Q.generators.back()), "3*x2^2");
}

TEST(RealPoint, JacobianRankSubset) {
    auto circle = jacobian_rank_subset(S({"x1^2 + x2^2 - 1"}, 2), 1);
    EXPECT_EQ(dimension(circle), -1);

    auto node = jacobian_rank_subset(S({"x2^2 - x1^2*(x1 + 1)"}, 2), 1);
    EXPECT_EQ(dimension(node), 0);
    EXPECT_TRUE(verify_membership({RAN(0), RAN(0)}, node));
    EXPECT_FALSE(verify_membership({RAN(-1), RAN(0)}, node));

    auto lines = jacobian_rank_subset(S({"x1*x2"}, 2), 1);
    EXPECT_EQ(dimension(lines), 0);
    EXPECT_TRUE(verify_membership({RAN(0), RAN(0)}, lines));
    EXPECT_FALSE(verify_membership({RAN(0), RAN(1)}, lines));

    EXPECT_THROW(jacobian_rank_subset(S({"x1"}, 2), 2), input_error);
    EXPECT_THROW(jacobian_rank_subset(S({"x1"}, 2), -1), input_error);
}

TEST(RealPoint, LiftFiber) {
    auto r = lift_fiber(P("x2^2 + x1*x2 - 1", 2), {RAN(0)});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], RAN(-1));
    EXPECT_EQ(r[1], RAN(1));

    RAN s2 = sqrt_of(2);
    auto q = lift_fiber(P("x2^2 - 2", 2), {sqrt_of(3)});
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0], -s2);
    EXPECT_EQ(q[1], s2);

    EXPECT_TRUE(lift_fiber(P("x2^2 + 1", 2), {RAN(0)}).empty());

    // algebraic base: x2^2 = x1 at x1 = sqrt2 gives the fourth roots of 2
    auto f = lift_fiber(P("x2^2 - x1", 2), {s2});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[1] * f[1], s2);
    EXPECT_EQ(f[1].degree(), 4);
}

TEST(RealPoint, VerifyMembership) {
    auto circle = S({"x1^2 + x2^2 - 1"}, 2);
    EXPECT_TRUE(verify_membership({RAN(1), RAN(0)}, circle));
    EXPECT_FALSE(verify_membership({RAN(1), RAN(1)}, circle));
    RAN s = sqrt_of(2);
    EXPECT_TRUE(verify_membership({s, s / RAN(2)}, S({"x1*x2 - 1"}, 2)));
    EXPECT_THROW(verify_membership({RAN(1)}, circle), input_error);
}

TEST(RealPoint, FindExamples) {
    auto circle = S({"x1^2 + x2^2 - 1"}, 2);
    auto o = find_small_height_real_point(circle);
    expect_found_on(circle, o);
    EXPECT_LE(o.certificate->height.upper, 4);

    auto lin = S({"2*x1 - 1"}, 1);
    auto l = find_small_height_real_point(lin);
    expect_found_on(lin, l);
    EXPECT_EQ(l.certificate->coordinates[0], RAN(Rat(1, 2)));
    EXPECT_TRUE(l.certificate->height.exact);
    EXPECT_EQ(l.certificate->height.upper, 2);

    auto empty = find_small_height_real_point(S({"x1^2 + x2^2 + 1"}, 2));
    EXPECT_EQ(empty.status, SearchStatus::no_real_point);
    EXPECT_FALSE(empty.certificate);

    auto all = find_small_height_real_point(AlgebraicSet(3, {}));
    ASSERT_EQ(all.status, SearchStatus::found);
    EXPECT_EQ(all.certificate->coordinates, std::vector<RAN>(3, RAN(0)));
    EXPECT_EQ(all.certificate->height.upper, 1);
}

TEST(RealPoint, FindOnCurvesAndSurfaces) {
    std::vector<AlgebraicSet> cases = {
        S({"x2^2 - x1^2*(x1 + 1)"}, 2),
        S({"x2^2 - x1^3"}, 2),
        S({"x1^2 + 4*x2^2 - 4"}, 2),
        S({"x1^2 + x2^2 + x3^2 - 1"}, 3),
        S({"x1^2 + x2^2 - 2", "x1 - x2"}, 2),
        S({"x1^2 + x2^2 + x3^2 - 3", "x3 - 1"}, 3),
        S({"x1^2 - 2"}, 1),
    };
    for (const auto& V : cases) expect_found_on(V, find_small_height_real_point(V));
}

TEST(RealPoint, IsolatedRealPointOfAnEmptyLookingCurve) {
    // x1^2 + x2^2 = 0 has only the origin
    auto V = S({"x1^2 + x2^2"}, 2);
    auto o = find_small_height_real_point(V);
    expect_found_on(V, o);
    EXPECT_EQ(o.certificate->coordinates, (std::vector<RAN>{RAN(0), RAN(0)}));
}

TEST(RealPoint, AlgebraicCoefficients) {
    RAN s = sqrt_of(2);
    // sqrt2 * x1 - 1 = 0
    MultivariatePolynomial f(1);
    f.add_term({1}, s);
    f.add_term({0}, RAN(-1));
    auto o = find_small_height_real_point(std::vector<MultivariatePolynomial>{f});
    ASSERT_EQ(o.status, SearchStatus::found) << o.reason;
    EXPECT_EQ(o.certificate->coordinates[0] * s, RAN(1));
    EXPECT_TRUE(verify_membership(o.certificate->coordinates, std::vector<MultivariatePolynomial>{f}));
}

TEST(RealPoint, NeverFoundOnEmptyLoci) {
    for (const char* s : {"x1^2 + x2^2 + 1", "x1^4 + x2^2 + 2", "x1^2 + 1"}) {
        std::size_t n = std::string(s).find("x2") != std::string::npos ? 2 : 1;
        auto o = find_small_height_real_point(S({s}, n));
        EXPECT_NE(o.status, SearchStatus::found) << s;
    }
}

TEST(RealPoint, BudgetGivesInconclusive) {
    SearchBudget b;
    b.max_branches = 1;
    auto o = find_small_height_real_point(S({"x1^2 + x2^2 - 1"}, 2), b);
    EXPECT_EQ(o.status, SearchStatus::inconclusive);
    EXPECT_FALSE(o.reason.empty());
}
