#pragma once

#include "smallpoint/exactnum/upoly.hpp"

#include <utility>
#include <vector>

namespace smallpoint {

/*
 * Irreducible factors over Q of a primitive squarefree integer polynomial of
 * degree >= 1 (Berlekamp modulo a small prime, Hensel lifting, subset
 * recombination). Factors are primitive with positive leading coefficient,
 * sorted by (degree, coefficients).
 */
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/* Full factorisation of a nonzero polynomial: (content sign-adjusted unit, [(factor, multiplicity)]). */
std::vector<std::pair<ZPoly, int>> factor_over_q(const ZPoly& f);

/* Irreducibility test for a primitive polynomial of degree >= 1. */
bool is_irreducible(const ZPoly& f);

/* Limit on modular factor count before recombination is abandoned. */
constexpr int max_modular_factors = 24;

} // namespace smallpoint
