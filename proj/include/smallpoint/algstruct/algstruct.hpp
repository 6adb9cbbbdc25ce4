#pragma once

// Generation of a product of number fields by a set of elements, decided by a
// span computation and by the Goursat-type criterion, and the discriminant
// index identity for suborders.

#include "smallpoint/nflattice/nflattice.hpp"

#include <string>
#include <vector>

namespace smallpoint {

/* i-th component in the power basis of the i-th field */
struct ProductAlgebraElement {
    std::vector<QVec> components;
};

struct GenerationResult {
    bool generates = false;
    bool by_span = false;
    bool by_criterion = false;
    std::string witness; // failing condition when false
};

/* QVec in the power basis of `to`, image of the generator of `from` for each embedding from -> to */
std::vector<QVec> field_isomorphisms(const NumberField& from, const NumberField& to);

/* dimension over Q of the subalgebra generated by theta (monomials of degree <= dim A) */
std::size_t generated_dimension(const std::vector<NumberField>& fields, const std::vector<ProductAlgebraElement>& theta);

/* both routes are computed and must agree; disagreement raises invariant_error */
GenerationResult generates_product_algebra(const std::vector<NumberField>& fields,
                                           const std::vector<ProductAlgebraElement>& theta);

struct OrderPair {
    ZPoly defining_poly; // monic
    QMat order_basis;    // O, rows in the power basis
    ZMat suborder;       // R, rows in O coordinates
};

struct DiscIndex {
    Int discR, discO, index;
    bool identity_holds = false;
};

/* structure constants: table[i][j] = coordinates of b_i * b_j; input_error when not integral */
std::vector<std::vector<ZVec>> multiplication_table(const ZPoly& m, const QMat& basis);

DiscIndex disc_index_check(const OrderPair& pair);

/* Z + c O as rows in O coordinates; `one` holds the O coordinates of 1 */
ZMat conductor_suborder(const ZVec& one, const Int& c);

} // namespace smallpoint
