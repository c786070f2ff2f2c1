#pragma once

#include "qcel/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcel::oracle {

inline int64_t tri(int64_t m) { return m * (m + 1) / 2; }

// Gaussian binomial [top ch bottom] in base q^d. Zero for bottom < 0;
// for top < 0 the generalized Laurent value from the Pochhammer-quotient
// definition (reflection identity). Memoized.
QPolynomial qBin(long top, long bottom, long d = 1);

// telescoped product of q-binomials
QPolynomial qMultinomial(long L, const std::vector<long>& parts, long d = 1);

// the two triple-bounded sums and the closed right-hand sides
QPolynomial gPoly(long i, long j, long k, long L1, long L2, long M);
QPolynomial pPoly(long i, long j, long k, long L1, long L2, long M);
QPolynomial rhsDouble(long i, long j, long k, long L, long M);
QPolynomial rhsSingle(long i, long j, long k, long L);

// finite Jacobi and Euler analogs: (left, right) of each identity
std::pair<BiLaurent, BiLaurent> jacobiSides(long L);
std::pair<QPolynomial, QPolynomial> eulerSides(long L);

// both sides of the sum-side recurrences, used as exact sequence values
BiLaurent jacobiLeft(long L);
QPolynomial eulerLeft(long L);

// coefficientwise stabilization of gPoly(i,j,k,L,L,L) against the
// low-order truncation of q^{T_i+T_j+T_k} / ((q)_i (q)_j (q)_k)
bool stabilizationCheck(long i, long j, long k, long order);

struct GridRange {
    std::string name;
    long lo, hi;
};

struct GridReport {
    std::string identity;
    std::vector<GridRange> ranges;
    bool pass = false;
    uint64_t points = 0;
    std::optional<std::vector<std::pair<std::string, long>>> counterexample;
    std::string lhs, rhs;   // rendered values at the counterexample
};

const std::vector<std::string>& knownIdentities();
std::vector<GridRange> defaultRanges(const std::string& identity);

// exact comparison of both sides of the identity at every grid point
GridReport verifyGrid(const std::string& identity, const std::vector<GridRange>& ranges);

} // namespace qcel::oracle
