#pragma once

#include "qcel/summand.hpp"

#include <set>

namespace qcel {

// Denominator of a factored quotient as a factored value with non-negative
// parts (value = scalar * x^mono * prod f^m).
FactoredRat denomOf(const FactoredRat& fr, uint32_t nvars);

// Syntactic least common multiple of the denominators (factor multisets,
// monomials, integer scalars).
FactoredRat lcmDen(const std::vector<FactoredRat>& frs, uint32_t nvars);

// fr * D expanded to a polynomial; D must clear fr's denominator
MultiPoly clearedPoly(const FactoredRat& fr, const FactoredRat& D, uint32_t nvars);

// projections of the monomial support onto the elimination variables
std::set<Mono> elimSupport(const MultiPoly& p, const std::vector<VarId>& elimVars);

} // namespace qcel
