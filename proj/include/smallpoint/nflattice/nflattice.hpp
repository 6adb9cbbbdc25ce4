#pragma once

// Number fields with embedding data and integral bases, exact LLL, reduction
// of module lattices into the maximal order, totally real sign elements and
// scaling of Hermitian forms.

#include "smallpoint/exactnum/numfield.hpp"
#include "smallpoint/exactnum/order.hpp"
#include "smallpoint/heights/complex_roots.hpp"
#include "smallpoint/heights/heights.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smallpoint {

using Ledger = std::vector<std::pair<std::string, Rat>>;

/* elements are power-basis coordinate vectors of length degree */
struct NumberField {
    ZPoly defining_poly;               // monic, irreducible
    int degree = 1;
    std::vector<RAN> real_roots;       // ascending; real embedding j sends the generator to real_roots[j]
    std::vector<RootBox> complex_roots; // one per conjugate pair, positive imaginary part
    QMat integral_basis;               // rows, power-basis coordinates
    Int disc = 1;

    bool totally_real() const { return complex_roots.empty(); }
    /* Q[y]/(m) with the j-th real root as its embedding; null for Q */
    FieldPtr real_place(std::size_t j) const;
};

/* p irreducible over Q of degree >= 1; rescaled to a monic integral polynomial */
NumberField make_number_field(const ZPoly& p);
NumberField rational_field();

QVec nf_one(const NumberField& F);
QVec nf_add(const QVec& a, const QVec& b);
QVec nf_sub(const QVec& a, const QVec& b);
QVec nf_times(const NumberField& F, const QVec& a, const QVec& b);
Rat nf_norm_of(const NumberField& F, const QVec& a);
/* power basis <-> integral basis coordinates */
QVec to_power_basis(const NumberField& F, const QVec& integral_coords);
QVec to_integral_coords(const NumberField& F, const QVec& power_coords);
/* certified enclosure of the j-th real embedding of a */
DyadicInterval real_embedding(const NumberField& F, std::size_t j, const QVec& a, const Rat& eps);
/* floor of (d!/d^d)(4/pi)^s sqrt|disc|, rounded up when the float margin is unclear */
Int minkowski_bound(const NumberField& F);

struct GramReduction {
    ZMat transform; // rows express the reduced vectors in the input basis
    QMat gram;      // gram of the reduced vectors
};
/* LLL with delta = 3/4 on a positive definite Gram matrix; input_error otherwise */
GramReduction lll_reduce_gram(const QMat& gram);

struct LLLResult {
    ZMat basis;     // transform * input
    ZMat transform; // unimodular
    QMat gram;
};
/* rows of basis are the lattice generators; the form defaults to the standard one */
LLLResult lll_reduce(const ZMat& basis, const std::optional<QMat>& form = std::nullopt);

struct NFModuleLattice {
    std::vector<NumberField> fields;
    std::vector<int> multiplicities;
    QMat basis; // rows: coordinates over the integral bases, block by block

    std::size_t ambient_dim() const;
};

using FieldMatrix = std::vector<std::vector<QVec>>;

struct MinkowskiReduction {
    std::vector<FieldMatrix> nu; // one r_i x r_i block per field
    QMat image;                  // nu applied to the basis rows, integral-basis coordinates
    Int index;                   // [L0 : nu L] from the determinant of image
    Int exponent;                // smallest e with e * (O L) inside L
    Rat bound;                   // exponent^rank * product of Minkowski bounds
    Ledger ledger;
};

MinkowskiReduction minkowski_reduce(const NFModuleLattice& L);
/* apply block matrices to vectors given in integral-basis coordinates */
QMat apply_blocks(const NFModuleLattice& L, const std::vector<FieldMatrix>& nu, const QMat& vectors);

struct SignElement {
    QVec zeta;                 // power basis, an algebraic integer
    std::vector<RAN> embeddings; // value under each real embedding
    Rat mu_hat;                // covering radius upper bound for the trace form
    Rat bound;                 // (3 mu_hat)^d
    HeightEnclosure height;
    Ledger ledger;
};

/* signs[j] in {+1, -1} prescribes the sign under real embedding j */
SignElement totally_real_sign_element(const NumberField& F, const std::vector<int>& signs);

struct HermitianScaling {
    FieldMatrix Q;      // entries in the maximal order
    FieldMatrix scaled; // Q^dagger A Q
    Rat entry_bound;    // every embedding of every entry of scaled is at most this in absolute value
    Ledger ledger;
};

/* A Hermitian and positive definite at every embedding; F totally real or imaginary quadratic */
HermitianScaling hermitian_scale(const NumberField& F, const FieldMatrix& A);
QVec nf_conj(const NumberField& F, const QVec& a);

} // namespace smallpoint
