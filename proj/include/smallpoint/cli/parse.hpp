#pragma once

// Polynomial text grammar: variables x1..xN (a bare x means x1, X is accepted
// for x), integer and p/q literals, + - * ^ and parentheses.

#include "smallpoint/mvpoly/mvpoly.hpp"

#include <string>
#include <vector>

namespace smallpoint {

/* nvars = 0 means "the largest variable index used" (at least 1) */
QPolyN parse_polynomial(const std::string& text, std::size_t nvars = 0);
/* all polynomials share max(nvars, largest index used) variables */
std::vector<QPolyN> parse_system(const std::vector<std::string>& texts, std::size_t nvars = 0);
/* largest variable index appearing in the text */
std::size_t max_variable_index(const std::string& text);

} // namespace smallpoint
