#pragma once

#include "qcel/structset.hpp"

#include <map>

namespace qcel {

// Summand-level recurrence with k-free polynomial coefficients:
//   sum over tuples of  coeff * F(v - tuple)  ==  0.
// Canonical form: denominator-cleared, content-free, and the coefficient of
// the lex-greatest tuple (the leading term of the rendered recurrence) has a
// positive leading coefficient.
struct KFreeRecurrence {
    VarTable table;
    size_t nRec = 0, nSum = 0;
    std::map<std::vector<int>, MultiPoly> coeffs;   // no zero entries

    std::vector<std::vector<int>> tuplesDescending() const;
    bool isKFree() const;   // coefficients mention no elimination generator
};

// the shared canonicalization used by summand and sum recurrences
void normalizeCoeffs(std::map<std::vector<int>, MultiPoly>& coeffs, uint32_t nvars);

KFreeRecurrence normalize(KFreeRecurrence rec);

// Build the ansatz over the structure set, clear denominators, compare
// coefficients of elimination-generator monomials, and return one
// recurrence per nullspace basis vector (deterministic order, normalized).
// Empty result = no recurrence over this structure set.
std::vector<KFreeRecurrence> findRecurrences(const Summand& f, const StructureSet& structure);

// formal verification: sum of coeff * shiftQuotient reduces to zero
bool checkKFree(const Summand& f, const KFreeRecurrence& rec);

// pipeline selection among several candidates: smallest support, then
// lowest total degree, then lex order of the coefficient list
const KFreeRecurrence& selectPreferred(const std::vector<KFreeRecurrence>& recs);

} // namespace qcel
