#include "smallpoint/cmsurvey/cmsurvey.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <tuple>

using namespace smallpoint;

namespace {

// Gauss reduction of a positive definite form, written out step by step
std::tuple<long, long, long> gauss_reduce(long a, long b, long c) {
    while (true) {
        if (b > a || b <= -a) {
            // translate tau so that -a < b <= a
            long k = (a - b) >= 0 ? (a - b) / (2 * a) : -((b - a + 2 * a - 1) / (2 * a));
            long nb = b + 2 * a * k;
            c = a * k * k + b * k + c;
            b = nb;
            continue;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0) b = -b;
        return {a, b, c};
    }
}

std::set<std::tuple<long, long, long>> classes_by_reduction(long D) {
    std::set<std::tuple<long, long, long>> out;
    for (long a = 1; a <= 40; ++a)
        for (long b = -40; b <= 40; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            out.insert(gauss_reduce(a, b, c));
        }
    return out;
}

} // namespace

TEST(CMSurvey, Examples) {
    EXPECT_EQ(enumerate_reduced_forms(-4), (std::vector<ReducedForm>{{Int(1), Int(0), Int(1)}}));
    EXPECT_EQ(enumerate_reduced_forms(-3), (std::vector<ReducedForm>{{Int(1), Int(1), Int(1)}}));
    EXPECT_EQ(enumerate_reduced_forms(-20),
              (std::vector<ReducedForm>{{Int(1), Int(0), Int(5)}, {Int(2), Int(2), Int(3)}}));
    EXPECT_EQ(enumerate_reduced_forms(-23).size(), 3u);
    EXPECT_THROW(enumerate_reduced_forms(-5), input_error);
    EXPECT_THROW(enumerate_reduced_forms(4), input_error);

    EXPECT_EQ(cm_point_height({Int(1), Int(0), Int(1)}).tau_height_sq, 1);
    EXPECT_EQ(cm_point_height({Int(1), Int(1), Int(1)}).tau_height_sq, 1);
    auto r = cm_point_height({Int(2), Int(2), Int(3)});
    EXPECT_EQ(r.tau_height_sq, 3);
    EXPECT_EQ(r.D, -20);
    EXPECT_EQ(r.tau_re, Rat(-1, 2));
    EXPECT_EQ(r.tau_im * r.tau_im, RAN(Rat(5, 4)));
}

TEST(CMSurvey, EnumerationMatchesGaussReduction) {
    for (long D = -3; D >= -400; --D) {
        long m = ((D % 4) + 4) % 4;
        if (m != 0 && m != 1) continue;
        std::set<std::tuple<long, long, long>> got;
        for (const auto& f : enumerate_reduced_forms(D)) got.insert({f.a.get_si(), f.b.get_si(), f.c.get_si()});
        EXPECT_EQ(got, classes_by_reduction(D)) << "D = " << D;
    }
}

TEST(CMSurvey, SmallSurvey) {
    auto s = survey(4);
    ASSERT_EQ(s.rows.size(), 2u);
    EXPECT_EQ(s.rows[0].D, -3);
    EXPECT_EQ(s.rows[1].D, -4);
    for (const auto& r : s.rows) EXPECT_EQ(r.tau_height_sq, 1);
    EXPECT_THROW(survey(2), input_error);

    auto t = survey(1000);
    EXPECT_TRUE(t.bound_holds);
    EXPECT_GT(t.fitted_exponent, 0);
    EXPECT_LE(t.fitted_exponent, 0.55);
    EXPECT_LE(t.max_height_sq_over_absD, 1);
    std::string csv = survey_csv(s);
    EXPECT_EQ(csv, "D,a,b,c,height_sq,log_height,log_absD\n"
                   "-3,1,1,1,1,0.000000000000,1.098612288668\n"
                   "-4,1,0,1,1,0.000000000000,1.386294361120\n");
}
