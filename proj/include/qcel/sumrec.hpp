#pragma once

#include "qcel/celine.hpp"
#include "qcel/qpoly.hpp"

#include <functional>

namespace qcel {

// aggregation collapsed to the trivial relation 0 = 0
struct CollapseError : std::runtime_error {
    CollapseError() : std::runtime_error("recurrence collapsed to 0 when summed") {}
};

// Recurrence for the full sum:  sum of coeff * SUM(n - tuple)  ==  0,
// tuples over the recurrence variables only. Same canonical form as
// KFreeRecurrence.
struct SumRecurrence {
    VarTable table;                                  // the producing summand's table
    std::map<std::vector<int>, MultiPoly> coeffs;

    std::vector<std::vector<int>> tuplesDescending() const;
};

// sum the k-free recurrence over the summation-variable shifts
SumRecurrence sumOver(const KFreeRecurrence& rec);

// re-index so every recurrence variable's minimal shift is 0
SumRecurrence backwardShifts(const SumRecurrence& rec);

struct TermwiseCertificate {
    bool holds = false;
    int window = 0;
    std::map<std::vector<int>, std::vector<int>> sumShifts;  // term tuple -> shifts
};

// find per-term summation shifts making the summand satisfy the sum
// recurrence as a rational identity; all-zero assignment first, then
// graded by total absolute shift up to the window
TermwiseCertificate checkTermwise(const Summand& f, const SumRecurrence& rec, int window);

// re-verify a specific assignment (used to validate stored certificates)
bool verifyTermwiseWitness(const Summand& f, const SumRecurrence& rec,
                           const std::map<std::vector<int>, std::vector<int>>& sumShifts);

// per-coefficient report of obvious monomial factors (coefficients that can
// vanish on integer hyperplanes need manual case analysis downstream)
std::vector<std::pair<std::vector<int>, std::string>>
vanishingFactorReport(const SumRecurrence& rec);

// coefficient evaluated at an integer point of the recurrence variables:
// generators become explicit q-powers, ground symbols stay symbolic
BiLaurent coeffAt(const VarTable& table, const MultiPoly& coeff, const std::vector<long>& point);

// the relation instantiated at a point, with sequence values supplied by the
// callback (argument = point - tuple); zero result means the relation holds
BiLaurent relationResidual(const SumRecurrence& rec, const std::vector<long>& point,
                           const std::function<BiLaurent(const std::vector<long>&)>& value);

} // namespace qcel
