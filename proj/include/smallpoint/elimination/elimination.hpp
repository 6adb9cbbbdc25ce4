#pragma once

// Padded resultants, the multi-resultant common-root test, small nonvanishing
// integer points, the Noether normalisation step, projection and dimension.

#include "smallpoint/mvpoly/mvpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smallpoint {

struct AlgebraicSet {
    std::size_t nvars = 1;
    std::vector<QPolyN> generators; // empty list: all of affine space
    int degree_bound = 0;           // D; raised to the largest generator degree when smaller
    std::vector<std::string> meta;  // provenance notes

    AlgebraicSet() = default;
    AlgebraicSet(std::size_t n, std::vector<QPolyN> gens, int D = 0, std::vector<std::string> notes = {});
    /* generators with zeros dropped */
    std::vector<QPolyN> nonzero_generators() const;
    /* true when some generator is a nonzero constant */
    bool trivially_empty() const;
};

/* Res_{d,e}(u, v): Sylvester determinant with u read at degree d and v at degree e. */
template <class F> F sylvester_resultant(const UPoly<F>& u, const UPoly<F>& v, int d, int e) {
    return resultant_padded(u, v, d, e);
}

/*
 * Common root of g_1..g_r in the algebraic closure, decided by the vanishing of
 * Res_{d,D}(g_1, l_2 g_2 + ... + l_{r-1} g_{r-1} + g_r) for all l in {0..d}^{r-2},
 * where d = deg g_1.
 */
template <class F> bool common_root_test(const std::vector<UPoly<F>>& gs0, int D) {
    if (gs0.empty()) throw input_error("common_root_test: empty family");
    std::vector<UPoly<F>> gs = gs0;
    for (auto& g : gs) {
        trim(g);
        if (degree(g) > D) throw input_error("common_root_test: degree exceeds the bound D");
    }
    if (gs[0].empty()) throw input_error("common_root_test: the first polynomial must be nonzero");
    int d = degree(gs[0]);
    std::size_t r = gs.size();
    if (r == 1) return d >= 1;
    if (r == 2) return is_zero_coef(sylvester_resultant(gs[0], gs[1], d, D));
    std::vector<int> lam(r - 2, 0);
    while (true) {
        UPoly<F> v = gs[r - 1];
        for (std::size_t i = 0; i + 2 < r; ++i)
            if (lam[i]) v = padd(v, pscale(gs[i + 1], F(long(lam[i]))));
        trim(v);
        if (!is_zero_coef(sylvester_resultant(gs[0], v, d, D))) return false;
        std::size_t k = 0;
        while (k < lam.size() && ++lam[k] > d) lam[k++] = 0;
        if (k == lam.size()) return true;
    }
}

/* Res_{d,e} in x_var of two multivariate polynomials, by evaluation and interpolation. */
QPolyN mv_resultant(const QPolyN& u, const QPolyN& v, std::size_t var, int d, int e);

/* nonzero integers |l_i| <= max(D, 1) with f(l) != 0; candidates 1, -1, 2, ..., D per coordinate */
std::vector<long> nonzero_integer_point(const QPolyN& f, int D);

struct NoetherStep {
    IntegerMatrix phi;
    QPolyN g;                            // monic in the last variable
    std::vector<QPolyN> transformed;     // every generator composed with phi^{-1}
    std::vector<long> lambda;
    int degree = 0;                      // degree of g in the last variable
    Rat scale;                           // g = scale * (f_1 o phi^{-1})
};

NoetherStep noether_step(const AlgebraicSet& V);

/* true when f, as a polynomial in the last variable, has leading coefficient 1 */
bool is_monic_in_last(const QPolyN& f);

/* past this many combinations project_image uses one resultant with an auxiliary parameter */
inline constexpr int max_grid_resultants = 64;

/* Image of V under dropping the last coordinate; some generator must be monic in it.
   Generators are reduced modulo that one and thinned to a linearly independent family first. */
AlgebraicSet project_image(const AlgebraicSet& Vp);

/* dimension, -1 for the empty set, nullopt when undecided */
std::optional<int> dimension(const AlgebraicSet& V);

/* primitive integer form with positive leading coefficient, duplicates removed */
std::vector<QPolyN> normalise_generators(const std::vector<QPolyN>& gens);

} // namespace smallpoint
