#include "qcel/polymatrix.hpp"
#include "qcel/ratfunc.hpp"

#include <algorithm>
#include <cassert>

namespace qcel {

namespace {

bool rowIsZero(const std::vector<MultiPoly>& row) {
    for (const MultiPoly& e : row)
        if (!e.isZero()) return false;
    return true;
}

} // namespace

std::vector<std::vector<MultiPoly>> nullspace(const PolyMatrix& m) {
    const size_t cols = m.cols();
    const uint32_t nvars = m.nvars();

    std::vector<std::vector<MultiPoly>> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<MultiPoly> row;
        row.reserve(cols);
        for (size_t c = 0; c < cols; ++c) row.push_back(m.at(r, c));
        if (!rowIsZero(row)) rows.push_back(std::move(row));
    }

    // fraction-free Bareiss forward elimination, fewest-terms pivot
    std::vector<size_t> pivotCols;
    MultiPoly prev(nvars, 1);
    size_t top = 0;
    for (size_t col = 0; col < cols && top < rows.size(); ++col) {
        size_t best = rows.size();
        for (size_t i = top; i < rows.size(); ++i) {
            if (rows[i][col].isZero()) continue;
            if (best == rows.size() ||
                rows[i][col].termCount() < rows[best][col].termCount())
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);
        const MultiPoly piv = rows[top][col];
        for (size_t i = top + 1; i < rows.size(); ++i) {
            if (rows[i][col].isZero()) {
                for (size_t j = col + 1; j < cols; ++j)
                    if (!rows[i][j].isZero())
                        rows[i][j] = divExact(rows[i][j] * piv, prev);
            } else {
                for (size_t j = col + 1; j < cols; ++j)
                    rows[i][j] = divExact(rows[i][j] * piv - rows[i][col] * rows[top][j], prev);
                rows[i][col] = MultiPoly(nvars);
            }
        }
        rows.erase(std::remove_if(rows.begin() + static_cast<long>(top) + 1, rows.end(), rowIsZero),
                   rows.end());
        prev = piv;
        pivotCols.push_back(col);
        ++top;
    }
    const size_t rank = pivotCols.size();

    std::vector<size_t> freeCols;
    {
        std::vector<bool> isPivot(cols, false);
        for (size_t c : pivotCols) isPivot[c] = true;
        for (size_t c = 0; c < cols; ++c)
            if (!isPivot[c]) freeCols.push_back(c);
    }

    std::vector<std::vector<MultiPoly>> basis;
    for (size_t f : freeCols) {
        // back-substitution over the fraction field
        std::vector<RatFunc> x(cols, RatFunc(nvars));
        x[f] = RatFunc(MultiPoly(nvars, 1), MultiPoly(nvars, 1));
        for (size_t t = rank; t-- > 0;) {
            size_t c = pivotCols[t];
            RatFunc sum(nvars);
            for (size_t j = c + 1; j < cols; ++j) {
                if (rows[t][j].isZero() || x[j].isZero()) continue;
                sum = sum + RatFunc(rows[t][j], MultiPoly(nvars, 1)) * x[j];
            }
            x[c] = -sum / RatFunc(rows[t][c], MultiPoly(nvars, 1));
        }
        // clear denominators
        MultiPoly lcm(nvars, 1);
        for (const RatFunc& xi : x) {
            if (xi.isZero()) continue;
            MultiPoly g = polyGcd(lcm, xi.den());
            lcm = lcm * divExact(xi.den(), g);
        }
        std::vector<MultiPoly> v;
        v.reserve(cols);
        for (const RatFunc& xi : x) {
            if (xi.isZero()) v.push_back(MultiPoly(nvars));
            else v.push_back(xi.num() * divExact(lcm, xi.den()));
        }
        // content-free, first nonzero entry positive
        MultiPoly g(nvars);
        for (const MultiPoly& e : v)
            if (!e.isZero()) g = polyGcd(g, e);
        if (!g.isConstant() && !g.isZero())
            for (MultiPoly& e : v)
                if (!e.isZero()) e = divExact(e, g);
        Rational rc = 0;
        for (const MultiPoly& e : v) rc = ratGcd(rc, e.content());
        const MultiPoly* firstNz = nullptr;
        for (const MultiPoly& e : v)
            if (!e.isZero()) { firstNz = &e; break; }
        if (firstNz && firstNz->leading().coeff < 0) rc = -rc;
        if (rc != 0 && rc != 1)
            for (MultiPoly& e : v) e = e.scaled(1 / rc);
        basis.push_back(std::move(v));
    }

    // deterministic order: lexicographic by support
    auto support = [](const std::vector<MultiPoly>& v) {
        std::vector<size_t> s;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].isZero()) s.push_back(i);
        return s;
    };
    std::sort(basis.begin(), basis.end(),
              [&](const auto& a, const auto& b) { return support(a) < support(b); });
    return basis;
}

} // namespace qcel
