#include "qcel/celine.hpp"
#include "qcel/clearing.hpp"
#include "qcel/polymatrix.hpp"

#include <algorithm>
#include <cassert>

namespace qcel {

std::vector<std::vector<int>> KFreeRecurrence::tuplesDescending() const {
    std::vector<std::vector<int>> ts;
    ts.reserve(coeffs.size());
    for (const auto& [t, c] : coeffs) ts.push_back(t);
    std::sort(ts.begin(), ts.end(), std::greater<>());
    return ts;
}

bool KFreeRecurrence::isKFree() const {
    for (VarId v : table.elimVars())
        for (const auto& [t, c] : coeffs)
            if (c.mentions(v)) return false;
    return true;
}

void normalizeCoeffs(std::map<std::vector<int>, MultiPoly>& coeffs, uint32_t nvars) {
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second.isZero() ? coeffs.erase(it) : std::next(it);
    if (coeffs.empty())
        throw std::invalid_argument("all recurrence coefficients are zero");
    // polynomial + monomial content
    MultiPoly g(nvars);
    for (const auto& [t, c] : coeffs) g = polyGcd(g, c);
    if (!g.isConstant())
        for (auto& [t, c] : coeffs) c = divExact(c, g);
    // rational content
    Rational rc = 0;
    for (const auto& [t, c] : coeffs) rc = ratGcd(rc, c.content());
    // sign anchored at the lex-greatest tuple
    if (coeffs.rbegin()->second.leading().coeff < 0) rc = -rc;
    if (rc != 1)
        for (auto& [t, c] : coeffs) c = c.scaled(1 / rc);
}

KFreeRecurrence normalize(KFreeRecurrence rec) {
    normalizeCoeffs(rec.coeffs, rec.table.nvars());
    return rec;
}

std::vector<KFreeRecurrence> findRecurrences(const Summand& f, const StructureSet& structure) {
    const VarTable& t = f.table();
    const uint32_t nv = t.nvars();
    const auto elim = t.elimVars();
    if (structure.tupleLen() != t.shiftSyms().size())
        throw std::invalid_argument("structure set does not match the summand's variables");

    const auto& tuples = structure.tuples();
    std::vector<FactoredRat> frs;
    frs.reserve(tuples.size());
    for (const auto& tp : tuples) frs.push_back(f.shiftQuotientFactored(tp));
    FactoredRat D = lcmDen(frs, nv);

    // rows indexed by elimination monomial, deterministic (ascending graded lex)
    struct MonoLess {
        bool operator()(const Mono& a, const Mono& b) const { return monoCmp(a, b) < 0; }
    };
    std::map<Mono, size_t, MonoLess> rowOf;
    std::vector<std::vector<std::vector<Term>>> entries;  // [row][col] term lists
    for (size_t col = 0; col < tuples.size(); ++col) {
        MultiPoly P = clearedPoly(frs[col], D, nv);
        for (const Term& term : P.terms()) {
            Mono key(elim.size());
            Term rest = term;
            for (size_t i = 0; i < elim.size(); ++i) {
                key[i] = term.mono[elim[i]];
                rest.mono[elim[i]] = 0;
            }
            auto [it, fresh] = rowOf.try_emplace(key, rowOf.size());
            if (fresh) entries.emplace_back(tuples.size());
            entries[it->second][col].push_back(std::move(rest));
        }
    }

    PolyMatrix M(rowOf.size(), tuples.size(), nv);
    {
        // place rows in key order
        std::vector<size_t> order(rowOf.size());
        size_t r = 0;
        for (const auto& [key, idx] : rowOf) order[idx] = r++;
        for (size_t idx = 0; idx < entries.size(); ++idx)
            for (size_t col = 0; col < tuples.size(); ++col)
                M.at(order[idx], col) = MultiPoly::fromTerms(nv, std::move(entries[idx][col]));
    }

    std::vector<KFreeRecurrence> out;
    for (auto& vec : nullspace(M)) {
        KFreeRecurrence rec;
        rec.table = t;
        rec.nRec = structure.nRec();
        rec.nSum = structure.nSum();
        for (size_t col = 0; col < tuples.size(); ++col)
            if (!vec[col].isZero()) rec.coeffs[tuples[col]] = std::move(vec[col]);
        out.push_back(normalize(std::move(rec)));
    }
    return out;
}

bool checkKFree(const Summand& f, const KFreeRecurrence& rec) {
    const uint32_t nv = f.table().nvars();
    std::vector<FactoredRat> frs;
    std::vector<const MultiPoly*> sigmas;
    for (const auto& [tp, c] : rec.coeffs) {
        frs.push_back(f.shiftQuotientFactored(tp));
        sigmas.push_back(&c);
    }
    FactoredRat D = lcmDen(frs, nv);
    MultiPoly acc(nv);
    for (size_t i = 0; i < frs.size(); ++i)
        acc += *sigmas[i] * clearedPoly(frs[i], D, nv);
    return acc.isZero();
}

const KFreeRecurrence& selectPreferred(const std::vector<KFreeRecurrence>& recs) {
    if (recs.empty())
        throw std::invalid_argument("no recurrence to select from");
    auto totalDeg = [](const KFreeRecurrence& r) {
        int64_t d = 0;
        for (const auto& [t, c] : r.coeffs) d += c.totalDegree();
        return d;
    };
    auto key = [&](const KFreeRecurrence& r) {
        return std::make_pair(r.coeffs.size(), totalDeg(r));
    };
    const KFreeRecurrence* best = &recs[0];
    for (const KFreeRecurrence& r : recs) {
        auto kb = key(*best), kr = key(r);
        if (kr < kb) best = &r;
        // lex tie-break is the deterministic nullspace order: keep the first
    }
    return *best;
}

} // namespace qcel
