#pragma once

// CM points on the modular curve: reduced binary quadratic forms of negative
// discriminant, the exact height of tau = (-b + sqrt D) / 2a, and a survey of
// height against discriminant with a least-squares log-log slope.

#include "smallpoint/heights/heights.hpp"

#include <string>
#include <vector>

namespace smallpoint {

struct ReducedForm {
    Int a, b, c;
    bool operator==(const ReducedForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct CMPointRecord {
    Int D;
    ReducedForm form;
    Int tau_height_sq; // max(a, c)
    Rat tau_re;        // -b / 2a
    RAN tau_im;        // sqrt|D| / 2a
};

/* D < 0, D = 0 or 1 mod 4; primitive reduced forms ordered by (a, b) */
std::vector<ReducedForm> enumerate_reduced_forms(long D);

/* checks the formula against the Mahler measure of a x^2 + b x + c and the fundamental domain */
CMPointRecord cm_point_height(const ReducedForm& f);

struct SurveyResult {
    std::vector<CMPointRecord> rows; // ordered by (|D|, a, b)
    double fitted_exponent = 0;      // slope of log H(tau) against log |D|
    Rat max_height_sq_over_absD;
    bool bound_holds = true;         // H(tau)^2 <= |D| on every row
};

SurveyResult survey(long Dmax);

/* log x rounded to `digits` decimals, correctly rounded through MPFR */
std::string log_decimal(const Int& x, int digits = 12);

/* header plus one line per row: D,a,b,c,height_sq,log_height,log_absD */
std::string survey_csv(const SurveyResult& s);

} // namespace smallpoint
