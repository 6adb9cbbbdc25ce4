#pragma once

// Orders in Q[y]/(m), m monic integral: lattices written as rows of
// power-basis coordinates. Includes the Round 2 p-maximal order.

#include "smallpoint/exactnum/linalg.hpp"
#include "smallpoint/exactnum/upoly.hpp"

#include <utility>
#include <vector>

namespace smallpoint {

/* prime factorisation of |n| (n != 0), primes ascending */
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

Int poly_discriminant(const ZPoly& m);

/* product of two power-basis vectors modulo m */
QVec nf_mul(const ZPoly& m, const QVec& a, const QVec& b);
/* Tr(theta^k) for k < 2n - 1 */
std::vector<Int> power_traces(const ZPoly& m, int count);
Rat nf_trace(const ZPoly& m, const QVec& a);
/* det of the trace form on the given basis */
Rat lattice_discriminant(const ZPoly& m, const QMat& basis);

/* HNF basis (rows) of the Z-span of rational generators */
QMat lattice_hnf(const QMat& gens);
/* |det| of a square basis */
Rat lattice_volume(const QMat& basis);
/* coordinates of v in the basis (rows) */
QVec coords_in(const QMat& basis, const QVec& v);
bool lattice_contains(const QMat& basis, const QVec& v);

/* Round 2: the p-maximal order containing the given order. */
QMat p_maximal_order(const ZPoly& m, const QMat& order_basis, const Int& p);
/* ring of integers; squarefree-part primes of the discriminant are skipped */
QMat maximal_order(const ZPoly& m);

} // namespace smallpoint
