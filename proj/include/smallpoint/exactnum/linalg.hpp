#pragma once

// Dense exact matrices over Z and Q. Rows are the outer index.

#include "smallpoint/exactnum/types.hpp"

#include <vector>

namespace smallpoint {

using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

ZMat zidentity(std::size_t n);
QMat qidentity(std::size_t n);
QMat to_qmat(const ZMat& a);
ZMat zmatmul(const ZMat& a, const ZMat& b);
QMat qmatmul(const QMat& a, const QMat& b);
QVec qmatvec(const QMat& a, const QVec& x);
ZMat ztranspose(const ZMat& a);
QMat qtranspose(const QMat& a);

Int zdet(const ZMat& a); // Bareiss
Rat qdet(const QMat& a);
std::size_t qrank(const QMat& a);
/* throws input_error when singular */
QMat qinverse(const QMat& a);
/* basis of {x : a x = 0} */
std::vector<QVec> qkernel(const QMat& a);
/* x with a x = b, or false when inconsistent */
bool qsolve(const QMat& a, const QVec& b, QVec& x);

/* Row Hermite normal form of the lattice spanned by the rows: upper triangular
 * (echelon), positive pivots, entries above each pivot reduced to [0, pivot).
 * Zero rows are dropped. */
ZMat hnf_rows(const ZMat& a);
/* Nonzero invariant factors d_1 | d_2 | ... of the row lattice. */
std::vector<Int> smith_diagonal(const ZMat& a);

/* Right kernel over Z/pZ for a prime p; entries reduced to [0, p). */
std::vector<ZVec> kernel_mod_p(const ZMat& a, const Int& p);

/* Common denominator of all entries and the scaled integer matrix. */
ZMat clear_denominators(const QMat& a, Int& den);

} // namespace smallpoint
