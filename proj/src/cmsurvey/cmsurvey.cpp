#include "smallpoint/cmsurvey/cmsurvey.hpp"

#include <cmath>
#include <numeric>
#include <mpfr.h>
#include <sstream>

namespace smallpoint {

std::vector<ReducedForm> enumerate_reduced_forms(long D) {
    if (D >= 0) throw input_error("enumerate_reduced_forms: discriminant must be negative");
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw input_error("enumerate_reduced_forms: discriminant must be 0 or 1 mod 4");
    std::vector<ReducedForm> out;
    long absD = -D;
    for (long a = 1; 3 * a * a <= absD; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            out.push_back({Int(a), Int(b), Int(c)});
        }
    return out;
}

CMPointRecord cm_point_height(const ReducedForm& f) {
    const Int &a = f.a, &b = f.b, &c = f.c;
    if (a < 1 || abs_int(b) > a || a > c) throw input_error("cm_point_height: form is not reduced");
    Int D = b * b - 4 * a * c;
    if (D >= 0) throw input_error("cm_point_height: form is not positive definite");
    CMPointRecord r;
    r.D = D;
    r.form = f;
    r.tau_height_sq = std::max(a, c);
    // H(tau)^2 is the Mahler measure of the primitive minimal polynomial a x^2 + b x + c
    RAN m = quadratic_mahler(ZPoly{c, b, a});
    check_invariant(m == RAN(Rat(r.tau_height_sq)), "cm_point_height: Mahler measure disagrees with max(a, c)");
    r.tau_re = Rat(-b, 2 * a);
    r.tau_re.canonicalize();
    RAN s;
    for (const auto& x : isolate_real_roots(ZPoly{D, Int(0), Int(1)}))
        if (x.sign() > 0) s = x;
    r.tau_im = s / RAN(Rat(2 * a));
    // fundamental domain: |Re tau| <= 1/2 and |tau|^2 = c / a >= 1
    check_invariant(abs_rat(r.tau_re) <= Rat(1, 2) && Rat(c, a) >= 1, "cm_point_height: tau outside the fundamental domain");
    return r;
}

std::string log_decimal(const Int& x, int digits) {
    mpfr_t v;
    mpfr_init2(v, 256);
    mpfr_set_z(v, x.get_mpz_t(), MPFR_RNDN);
    mpfr_log(v, v, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string s(buf);
    mpfr_free_str(buf);
    mpfr_clear(v);
    return s;
}

SurveyResult survey(long Dmax) {
    if (Dmax < 3) throw input_error("survey: Dmax must be at least 3");
    SurveyResult s;
    bool first = true;
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (long absD = 3; absD <= Dmax; ++absD) {
        long D = -absD;
        long r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        for (const auto& f : enumerate_reduced_forms(D)) {
            CMPointRecord rec = cm_point_height(f);
            if (rec.tau_height_sq > Int(absD)) s.bound_holds = false;
            Rat ratio(rec.tau_height_sq, Int(absD));
            ratio.canonicalize();
            if (first || ratio > s.max_height_sq_over_absD) s.max_height_sq_over_absD = ratio;
            first = false;
            long double x = std::log((long double)absD);
            long double y = 0.5L * std::log((long double)rec.tau_height_sq.get_d());
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
            s.rows.push_back(std::move(rec));
        }
    }
    long double den = (long double)n * sxx - sx * sx;
    s.fitted_exponent = den > 0 ? double(((long double)n * sxy - sx * sy) / den) : 0.0;
    return s;
}

std::string survey_csv(const SurveyResult& s) {
    std::ostringstream os;
    os << "D,a,b,c,height_sq,log_height,log_absD\n";
    for (const auto& r : s.rows) {
        // log H = (1/2) log H^2, rendered from a 256-bit value
        mpfr_t v;
        mpfr_init2(v, 256);
        mpfr_set_z(v, r.tau_height_sq.get_mpz_t(), MPFR_RNDN);
        mpfr_log(v, v, MPFR_RNDN);
        mpfr_div_2ui(v, v, 1, MPFR_RNDN);
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.12Rf", v);
        std::string logh(buf);
        mpfr_free_str(buf);
        mpfr_clear(v);
        os << r.D << ',' << r.form.a << ',' << r.form.b << ',' << r.form.c << ',' << r.tau_height_sq << ','
           << logh << ',' << log_decimal(abs_int(r.D)) << '\n';
    }
    return os.str();
}

} // namespace smallpoint
