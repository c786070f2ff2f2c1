#pragma once

#include "qcel/summand.hpp"

#include <set>
#include <vector>

namespace qcel {

// Finite set of shift tuples (recurrence shifts first, then summation
// shifts), stored sorted lexicographically.
class StructureSet {
public:
    StructureSet(size_t nRec, size_t nSum, std::vector<std::vector<int>> tuples);

    size_t nRec() const { return nRec_; }
    size_t nSum() const { return nSum_; }
    size_t tupleLen() const { return nRec_ + nSum_; }
    size_t size() const { return tuples_.size(); }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }
    bool contains(const std::vector<int>& t) const;

    bool operator==(const StructureSet& o) const {
        return nRec_ == o.nRec_ && nSum_ == o.nSum_ && tuples_ == o.tuples_;
    }

private:
    size_t nRec_, nSum_;
    std::vector<std::vector<int>> tuples_;
};

// full box {0..I_l} x {0..J_m}
StructureSet rectangular(const std::vector<int>& I, const std::vector<int>& J);

StructureSet parseStructureSet(size_t nRec, size_t nSum,
                               const std::vector<std::vector<int>>& tuples);

struct CompletionOptions {
    int maxGrowth = 4;     // cap on expansion beyond the seed bounding box
    int maxSweeps = 16;
};

// Verbaeten completion: grow the set with adjacent shifts whose cleared
// polynomial adds no new monomial in the elimination generators, sweeping
// to a fixed point. The number of linear equations stays constant.
StructureSet verbaetenComplete(const Summand& f, const StructureSet& s0,
                               const CompletionOptions& opts = {});

// number of distinct elimination-generator monomials over the set (the
// equation count of the linear system)
size_t equationCount(const Summand& f, const StructureSet& s);

} // namespace qcel
