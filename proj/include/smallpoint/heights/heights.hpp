#pragma once

// Multiplicative Weil heights: rationals, real algebraic numbers (exact for
// quadratics, Graeffe root squaring otherwise), points and polynomials.

#include "smallpoint/exactnum/numfield.hpp"
#include "smallpoint/mvpoly/mvpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smallpoint {

struct HeightEnclosure {
    Rat lower{1};
    Rat upper{1};
    bool exact = false;
    std::vector<std::pair<std::string, Rat>> trace;
    // H^exact_power equals exact_power_value, when known in closed form
    std::optional<RAN> exact_power_value;
    unsigned exact_power = 1;

    /* (upper - lower) / lower */
    Rat relative_width() const { return (upper - lower) / lower; }
    bool contains(const Rat& h) const { return lower <= h && h <= upper; }
};

HeightEnclosure height_rational(const Rat& q);

/* a2*max(1,|r1|)*max(1,|r2|) for the roots of a primitive integer quadratic, real or complex */
RAN quadratic_mahler(const ZPoly& q);

/* Mahler measure of an integer polynomial by Graeffe root squaring */
HeightEnclosure mahler_measure(const ZPoly& p, const Rat& tol);

HeightEnclosure height_algebraic(const RAN& a, const Rat& tol);

/* height of [1 : x_1 : ... : x_n]; coordinates share the field k */
HeightEnclosure height_point(const FieldPtr& k, const std::vector<NFElem>& p, const Rat& tol);
HeightEnclosure height_point(const std::vector<RAN>& p, const Rat& tol, int max_field_degree = 64);

/* projective height of the coefficient vector */
HeightEnclosure height_poly_rational(const QPolyN& f);
HeightEnclosure height_poly_rational(const QPoly& f);

/* d * H(f) for monic f of degree d; bounds the height of every root */
Rat root_height_bound(const QPoly& f);
Rat root_height_bound(const UPoly<RAN>& f, const Rat& tol = Rat(1, 1000000));

} // namespace smallpoint
