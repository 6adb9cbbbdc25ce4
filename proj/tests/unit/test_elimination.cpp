#include "smallpoint/cli/parse.hpp"
#include "smallpoint/elimination/elimination.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallpoint;

namespace {

QPolyN P(const std::string& s, std::size_t n = 0) { return parse_polynomial(s, n); }

RAN sqrt2() {
    for (const auto& r : isolate_real_roots(ZPoly{Int(-2), Int(0), Int(1)}))
        if (r.sign() > 0) return r;
    throw std::runtime_error("no root");
}

QPoly rand_qpoly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), c(-3, 3);
    QPoly p(std::size_t(deg(rng) + 1));
    for (auto& a : p) a = c(rng);
    trim(p);
    return p;
}

} // namespace

TEST(MvPoly, EvaluateAndPrint) {
    auto f = from_rational(P("x1^2 + x2^2 - 1"));
    EXPECT_EQ(evaluate(f, {RAN(1), RAN(0)}), RAN(0));
    EXPECT_EQ(evaluate(f, {RAN(1), RAN(1)}), RAN(1));
    RAN s = sqrt2();
    auto g = from_rational(P("x1*x2 - 1"));
    EXPECT_EQ(evaluate(g, {s, s / RAN(2)}), RAN(0));
    EXPECT_THROW(evaluate(g, {s}), input_error);
    EXPECT_EQ(to_string(P("x2^2 + x1*x2 - 1")), "x1*x2 + x2^2 - 1");
}

TEST(MvPoly, DerivativeAndTopForm) {
    EXPECT_EQ(partial_derivative(P("x1^2*x2"), 1), P("2*x1*x2"));
    EXPECT_TRUE(partial_derivative(P("7", 2), 1).is_zero());
    EXPECT_EQ(partial_derivative(P("x2^2 + x1*x2 - 1"), 2), P("2*x2 + x1"));
    EXPECT_THROW(partial_derivative(P("x1", 2), 3), input_error);
    EXPECT_EQ(top_form(P("x1^2 + x2^2 - 1")), P("x1^2 + x2^2"));
    EXPECT_EQ(top_form(P("x1*x2 - 1")), P("x1*x2"));
    EXPECT_THROW(top_form(QPolyN(2)), input_error);
}

TEST(MvPoly, LinearSubstitution) {
    ZMat phi{{Int(1), Int(-1)}, {Int(0), Int(1)}};
    auto g = substitute_linear(P("x1*x2 - 1"), phi, SubstMode::inverse);
    EXPECT_EQ(g, P("x2^2 + x1*x2 - 1"));
    EXPECT_EQ(substitute_linear(g, phi, SubstMode::forward), P("x1*x2 - 1"));
    EXPECT_THROW(substitute_linear(g, ZMat{{Int(1), Int(2)}, {Int(2), Int(4)}}, SubstMode::forward), input_error);

    // f(M^{-1}(M p)) = f(p) and the Leibniz rule on random inputs
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 30; ++it) {
        ZMat M{{Int(c(rng)), Int(c(rng))}, {Int(c(rng)), Int(c(rng))}};
        if (zdet(M) == 0) continue;
        QPolyN f = P("x1^3 - 2*x1*x2 + x2 + 5") * QPolyN::constant(2, Rat(c(rng) ? c(rng) : 1));
        std::vector<Rat> p{Rat(c(rng), 2), Rat(c(rng), 3)};
        for (auto& x : p) x.canonicalize();
        auto Mp = qmatvec(to_qmat(M), p);
        EXPECT_EQ(evaluate_at(substitute_linear(f, M, SubstMode::inverse), Mp), evaluate_at(f, p));
        QPolyN a = P("x1*x2 + " + std::to_string(c(rng)) + "*x2^2"), b = P("x1^2 - x2 + 1");
        EXPECT_EQ(partial_derivative(a * b, 1), partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
    }
}

TEST(Elimination, SylvesterResultant) {
    EXPECT_EQ(sylvester_resultant(QPoly{-1, 1}, QPoly{1, 1}, 1, 1), Rat(2));
    EXPECT_EQ(sylvester_resultant(QPoly{-1, 1}, QPoly{-2, 2}, 1, 1), Rat(0));
    EXPECT_EQ(sylvester_resultant(QPoly{1, 1}, QPoly{-1, 1}, 2, 2), Rat(0));
    EXPECT_THROW(sylvester_resultant(QPoly{1, 1, 1}, QPoly{-1, 1}, 1, 1), input_error);

    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        QPoly u = rand_qpoly(rng, 4), v = rand_qpoly(rng, 4);
        if (u.size() < 2 || v.size() < 2) continue;
        bool zero = sylvester_resultant(u, v, degree(u), degree(v)) == 0;
        EXPECT_EQ(zero, degree(pgcd(u, v)) >= 1);
    }
}

TEST(Elimination, CommonRootTest) {
    EXPECT_TRUE(common_root_test<Rat>({QPoly{-1, 0, 1}, QPoly{-1, 1}}, 2));
    EXPECT_FALSE(common_root_test<Rat>({QPoly{-1, 1}, QPoly{1, 1}}, 1));
    EXPECT_FALSE(common_root_test<Rat>({QPoly{-1, 0, 1}, QPoly{-4, 0, 1}, QPoly{0, 1}}, 2));
    EXPECT_THROW(common_root_test<Rat>({}, 2), input_error);
    EXPECT_TRUE(common_root_test<Rat>({QPoly{-1, 1}}, 1));
    EXPECT_FALSE(common_root_test<Rat>({QPoly{3}}, 1));
}

TEST(Elimination, NonzeroIntegerPoint) {
    EXPECT_EQ(nonzero_integer_point(P("x1*x2"), 2), (std::vector<long>{1, 1}));
    EXPECT_EQ(nonzero_integer_point(P("x1 - 1"), 1), (std::vector<long>{-1}));
    EXPECT_EQ(nonzero_integer_point(P("5", 3), 0), (std::vector<long>{1, 1, 1}));
    EXPECT_THROW(nonzero_integer_point(QPolyN(2), 2), input_error);
    // both coordinates skip 1 and -1
    auto f = P("(x1-1)*(x1+1)*(x2-1)*(x2+1)");
    auto l = nonzero_integer_point(f, 4);
    EXPECT_NE(evaluate_at(f, std::vector<Rat>{Rat(l[0]), Rat(l[1])}), 0);
    EXPECT_EQ(l, (std::vector<long>{2, 2}));
}

TEST(Elimination, NoetherStep) {
    auto st = noether_step(AlgebraicSet(2, {P("x1*x2 - 1")}));
    EXPECT_EQ(st.lambda, (std::vector<long>{1, 1}));
    EXPECT_EQ(st.phi, (ZMat{{Int(1), Int(-1)}, {Int(0), Int(1)}}));
    EXPECT_EQ(st.g, P("x2^2 + x1*x2 - 1"));

    auto st2 = noether_step(AlgebraicSet(2, {P("x2^2 - x1")}));
    EXPECT_TRUE(is_monic_in_last(st2.g));
    auto st3 = noether_step(AlgebraicSet(2, {P("x1^2 + x2^2 - 1")}));
    EXPECT_EQ(st3.lambda, (std::vector<long>{1, 1}));
    EXPECT_TRUE(is_monic_in_last(st3.g));
    EXPECT_EQ(st3.degree, 2);
    EXPECT_THROW(noether_step(AlgebraicSet(2, {QPolyN(2)})), input_error);
}

TEST(Elimination, ProjectImage) {
    auto a = project_image(AlgebraicSet(2, {P("x2^2 + x1*x2 - 1")}));
    EXPECT_TRUE(a.generators.empty());
    auto b = project_image(AlgebraicSet(2, {P("x2 - x1"), P("x2 - 1")}));
    ASSERT_EQ(b.generators.size(), 1u);
    EXPECT_EQ(to_string(b.generators[0]), "x1 - 1");
    auto c = project_image(AlgebraicSet(2, {P("x2 - 1"), P("x1", 2)}));
    ASSERT_EQ(c.generators.size(), 1u);
    EXPECT_EQ(c.generators[0], P("x1"));
    EXPECT_THROW(project_image(AlgebraicSet(2, {P("2*x2 - x1")})), input_error);
}

TEST(Elimination, Dimension) {
    EXPECT_EQ(dimension(AlgebraicSet(2, {P("x1^2 + x2^2 - 1")})), 1);
    EXPECT_EQ(dimension(AlgebraicSet(2, {P("x1", 2), P("x2")})), 0);
    EXPECT_EQ(dimension(AlgebraicSet(3, {})), 3);
    EXPECT_EQ(dimension(AlgebraicSet(2, {P("x1", 2), P("x1 - 1", 2)})), -1);
    // a redundant multiple leaves the dimension alone
    EXPECT_EQ(dimension(AlgebraicSet(2, {P("x1^2 + x2^2 - 1"), P("(x1^2 + x2^2 - 1)*(x1 + 2)")})), 1);
}

TEST(Elimination, ProjectImageManyGenerators) {
    // six independent remainders put the combination grid well past its cap
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd = [&](const std::string& var) {
        return "(" + std::to_string(c(rng)) + "*" + var + " + " + std::to_string(c(rng)) + ")";
    };
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<QPolyN> gens{P("x2^2 - x1", 2)};
        for (int i = 0; i < 6; ++i)
            gens.push_back(P("(x2 - 1)*" + rnd("x1") + " + (x1 - 1)*" + rnd("x2") + "*" + rnd("x1"), 2));
        AlgebraicSet img = project_image(AlgebraicSet(2, gens));
        for (int num = -6; num <= 8; ++num) {
            Rat a(num, 2);
            a.canonicalize();
            QPoly g;
            for (const auto& f : gens) {
                QPoly u;
                for (const auto& [m, co] : f.terms()) {
                    if (u.size() <= m[1]) u.resize(m[1] + 1, Rat(0));
                    u[m[1]] += co * pow_rat(a, m[0]);
                }
                trim(u);
                g = pgcd(g, u);
            }
            bool member = true;
            for (const auto& h : img.generators) member = member && evaluate_at(h, std::vector<Rat>{a}) == 0;
            EXPECT_EQ(member, degree(g) >= 1) << "trial " << trial << " x1 = " << to_string(a);
        }
    }
}
