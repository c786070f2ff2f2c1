#include "qcel/structset.hpp"
#include "qcel/clearing.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qcel {

FactoredRat denomOf(const FactoredRat& fr, uint32_t nvars) {
    FactoredRat d(nvars);
    if (fr.isZero()) return d;
    d.scalar = Rational(fr.scalar.get_den());
    for (size_t v = 0; v < fr.mono.size(); ++v)
        if (fr.mono[v] < 0) d.mono[v] = -fr.mono[v];
    for (const auto& [f, m] : fr.factors)
        if (m < 0) d.factors.emplace(f, -m);
    return d;
}

// combine denominator values (all parts non-negative) by max multiplicity
static FactoredRat lcmCombine(const std::vector<FactoredRat>& denoms, uint32_t nvars) {
    FactoredRat D(nvars);
    Integer sc = 1;
    for (const FactoredRat& d : denoms) {
        sc = lcm(sc, d.scalar.get_num());
        for (size_t v = 0; v < nvars; ++v)
            D.mono[v] = std::max(D.mono[v], d.mono[v]);
        for (const auto& [f, m] : d.factors) {
            auto it = D.factors.find(f);
            if (it == D.factors.end()) D.factors.emplace(f, m);
            else it->second = std::max(it->second, m);
        }
    }
    D.scalar = Rational(sc);
    return D;
}

FactoredRat lcmDen(const std::vector<FactoredRat>& frs, uint32_t nvars) {
    std::vector<FactoredRat> ds;
    ds.reserve(frs.size());
    for (const FactoredRat& fr : frs) ds.push_back(denomOf(fr, nvars));
    return lcmCombine(ds, nvars);
}

MultiPoly clearedPoly(const FactoredRat& fr, const FactoredRat& D, uint32_t nvars) {
    FactoredRat p = fr;
    p.mul(D);
    return p.expandNum(nvars);
}

std::set<Mono> elimSupport(const MultiPoly& p, const std::vector<VarId>& elimVars) {
    std::set<Mono> s;
    Mono key(elimVars.size());
    for (const Term& t : p.terms()) {
        for (size_t i = 0; i < elimVars.size(); ++i) key[i] = t.mono[elimVars[i]];
        s.insert(key);
    }
    return s;
}

// ---------------------------------------------------------------------------

StructureSet::StructureSet(size_t nRec, size_t nSum, std::vector<std::vector<int>> tuples)
    : nRec_(nRec), nSum_(nSum), tuples_(std::move(tuples)) {
    if (tuples_.empty())
        throw std::invalid_argument("structure set must be non-empty");
    for (const auto& t : tuples_)
        if (t.size() != nRec_ + nSum_)
            throw std::invalid_argument("ragged structure-set tuple");
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool StructureSet::contains(const std::vector<int>& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

StructureSet rectangular(const std::vector<int>& I, const std::vector<int>& J) {
    std::vector<int> dims;
    for (int d : I) dims.push_back(d);
    for (int d : J) dims.push_back(d);
    for (int d : dims)
        if (d < 0) throw std::invalid_argument("negative rectangular dimension");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dims.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t p = dims.size();
        while (p > 0) {
            --p;
            if (cur[p] < dims[p]) { ++cur[p]; break; }
            cur[p] = 0;
            if (p == 0) return StructureSet(I.size(), J.size(), std::move(out));
        }
        if (dims.empty()) break;
    }
    return StructureSet(I.size(), J.size(), std::move(out));
}

StructureSet parseStructureSet(size_t nRec, size_t nSum,
                               const std::vector<std::vector<int>>& tuples) {
    return StructureSet(nRec, nSum, tuples);
}

// ---------------------------------------------------------------------------
// Verbaeten completion

namespace {

struct QuotientCache {
    const Summand& f;
    std::map<std::vector<int>, FactoredRat> cache;
    const FactoredRat& get(const std::vector<int>& tuple) {
        auto it = cache.find(tuple);
        if (it != cache.end()) return it->second;
        return cache.emplace(tuple, f.shiftQuotientFactored(tuple)).first->second;
    }
};

std::set<Mono> supportUnion(const std::vector<FactoredRat>& frs, const FactoredRat& D,
                            uint32_t nv, const std::vector<VarId>& elim) {
    std::set<Mono> u;
    for (const FactoredRat& fr : frs) {
        auto s = elimSupport(clearedPoly(fr, D, nv), elim);
        u.insert(s.begin(), s.end());
    }
    return u;
}

bool sameDen(const FactoredRat& a, const FactoredRat& b) {
    return a.scalar == b.scalar && a.mono == b.mono && a.factors == b.factors;
}

} // namespace

size_t equationCount(const Summand& f, const StructureSet& s) {
    const uint32_t nv = f.table().nvars();
    std::vector<FactoredRat> frs;
    for (const auto& t : s.tuples()) frs.push_back(f.shiftQuotientFactored(t));
    FactoredRat D = lcmDen(frs, nv);
    return supportUnion(frs, D, nv, f.table().elimVars()).size();
}

StructureSet verbaetenComplete(const Summand& f, const StructureSet& s0,
                               const CompletionOptions& opts) {
    const uint32_t nv = f.table().nvars();
    const auto elim = f.table().elimVars();
    const size_t len = s0.tupleLen();
    QuotientCache qc{f, {}};

    std::vector<std::vector<int>> cur = s0.tuples();
    std::vector<int> cap(len, 0);
    for (const auto& t : cur)
        for (size_t i = 0; i < len; ++i) cap[i] = std::max(cap[i], t[i]);
    for (size_t i = 0; i < len; ++i) cap[i] += opts.maxGrowth;

    for (int sweep = 0; sweep < opts.maxSweeps; ++sweep) {
        std::vector<FactoredRat> frs;
        for (const auto& t : cur) frs.push_back(qc.get(t));
        FactoredRat D = lcmDen(frs, nv);
        std::set<Mono> baseU = supportUnion(frs, D, nv, elim);

        // candidate region: current bounding box + 1, capped, adjacent to the set
        std::vector<int> hi(len, 0);
        for (const auto& t : cur)
            for (size_t i = 0; i < len; ++i) hi[i] = std::max(hi[i], t[i]);
        for (size_t i = 0; i < len; ++i) hi[i] = std::min(hi[i] + 1, cap[i]);

        std::vector<std::vector<int>> accepted;
        std::vector<int> p(len, 0);
        auto isAdjacent = [&](const std::vector<int>& x) {
            for (const auto& t : cur) {
                int d = 0;
                for (size_t i = 0; i < len; ++i) d = std::max(d, std::abs(x[i] - t[i]));
                if (d == 1) return true;
            }
            return false;
        };
        while (true) {
            if (!std::binary_search(cur.begin(), cur.end(), p) && isAdjacent(p)) {
                const FactoredRat& frc = qc.get(p);
                if (!frc.isZero()) {
                    FactoredRat Dc = lcmCombine({D, denomOf(frc, nv)}, nv);
                    std::set<Mono> u = sameDen(Dc, D)
                                           ? baseU
                                           : supportUnion(frs, Dc, nv, elim);
                    auto sc = elimSupport(clearedPoly(frc, Dc, nv), elim);
                    bool ok = std::includes(u.begin(), u.end(), sc.begin(), sc.end());
                    if (ok) accepted.push_back(p);
                }
            }
            size_t i = len;
            bool done = true;
            while (i > 0) {
                --i;
                if (p[i] < hi[i]) { ++p[i]; done = false; break; }
                p[i] = 0;
            }
            if (done) break;
        }
        if (accepted.empty()) break;
        cur.insert(cur.end(), accepted.begin(), accepted.end());
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    }
    return StructureSet(s0.nRec(), s0.nSum(), std::move(cur));
}

} // namespace qcel
