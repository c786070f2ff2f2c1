#pragma once

#include "qcel/sumrec.hpp"

#include <string>

namespace qcel {

// coefficient polynomial in exponential notation, e.g. "q^(2 + L2) - q^(k)"
std::string renderPolyExp(const MultiPoly& p, const VarTable& t);

// paper-style layouts: terms in descending tuple order, trailing " == 0"
std::string renderKFree(const KFreeRecurrence& rec);
std::string renderSumRec(const SumRecurrence& rec);

} // namespace qcel
