#pragma once

// Certified complex roots of a squarefree integer polynomial: Aberth iteration
// for the approximations, then Weierstrass inclusion discs checked disjoint.

#include "smallpoint/exactnum/interval.hpp"
#include "smallpoint/exactnum/upoly.hpp"

#include <optional>
#include <vector>

namespace smallpoint {

struct RootBox {
    CInterval box; // holds exactly one root
    Interval radius;
};

/* nullopt when the discs at this precision overlap; retry with more bits */
std::optional<std::vector<RootBox>> certified_complex_roots(const ZPoly& p, mpfr_prec_t prec);

/* doubles the precision from 128 until certification succeeds (up to max_prec) */
std::vector<RootBox> complex_roots(const ZPoly& p, mpfr_prec_t min_prec = 128, mpfr_prec_t max_prec = 16384);

CInterval eval_complex(const QPoly& f, const CInterval& z);

} // namespace smallpoint
