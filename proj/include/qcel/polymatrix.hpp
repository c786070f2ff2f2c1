#pragma once

#include "qcel/multipoly.hpp"

#include <vector>

namespace qcel {

// Rectangular matrix of polynomial entries.
class PolyMatrix {
public:
    PolyMatrix(size_t rows, size_t cols, uint32_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          data_(rows * cols, MultiPoly(nvars)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t nvars() const { return nvars_; }

    MultiPoly& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const MultiPoly& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    uint32_t nvars_;
    std::vector<MultiPoly> data_;
};

// Basis of the right nullspace over the fraction field. Fraction-free
// Bareiss elimination; each basis vector is denominator-cleared, primitive,
// first nonzero entry has a positive leading coefficient. Vectors sorted
// lexicographically by support. Empty result = trivial nullspace.
std::vector<std::vector<MultiPoly>> nullspace(const PolyMatrix& m);

} // namespace qcel
