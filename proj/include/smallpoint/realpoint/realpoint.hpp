#pragma once

// Recursive search for a real algebraic point of small height on a real
// affine algebraic set: Noether step, projection, lifting through fibres, plus
// the repeated-root and Jacobian-rank subsets, with exact certification.

#include "smallpoint/elimination/elimination.hpp"
#include "smallpoint/heights/heights.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smallpoint {

using BoundLedger = std::vector<std::pair<std::string, Rat>>;

/* one fibre lift: a root of the monic specialised polynomial */
struct LiftRecord {
    UPoly<RAN> fiber;  // monic in the lifted variable
    RAN root;
    Rat bound;         // degree * upper H(fiber)
};

struct PointCertificate {
    std::vector<RAN> coordinates;
    bool membership_checked = false;
    HeightEnclosure height;
    BoundLedger bound_ledger;
    std::vector<LiftRecord> lifts;
    int field_degree = 1;
};

enum class SearchStatus { found, no_real_point, inconclusive };

struct SearchOutcome {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<PointCertificate> certificate;
    std::string reason;
};

struct SearchBudget {
    int max_depth = 0;          // 0: twice the variable count
    long max_branches = 10000;
    int max_field_degree = 64;
    Rat tol{1, 10000000};       // relative width of the reported height
};

std::string to_string(SearchStatus s);

/* W together with the first derivative of g in the last variable that is not zero on the samples */
AlgebraicSet repeated_root_subset(const AlgebraicSet& W, const QPolyN& g,
                                  const std::vector<std::vector<RAN>>& samples = {});

/* W together with the (n - dimW)-minors of the Jacobian of its generators */
AlgebraicSet jacobian_rank_subset(const AlgebraicSet& W, int dimW);

/* real roots of g(base, X_n) */
std::vector<RAN> lift_fiber(const QPolyN& g, const std::vector<RAN>& base, int max_field_degree = 64);

bool verify_membership(const std::vector<RAN>& p, const AlgebraicSet& V);
bool verify_membership(const std::vector<RAN>& p, const std::vector<MultivariatePolynomial>& gens);

SearchOutcome find_small_height_real_point(const AlgebraicSet& V, const SearchBudget& budget = {});
/* generators may carry real algebraic coefficients; they are normed down to Q first */
SearchOutcome find_small_height_real_point(const std::vector<MultivariatePolynomial>& gens,
                                           const SearchBudget& budget = {});

} // namespace smallpoint
