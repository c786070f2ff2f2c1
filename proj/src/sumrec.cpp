#include "qcel/sumrec.hpp"
#include "qcel/clearing.hpp"

#include <algorithm>
#include <cassert>

namespace qcel {

std::vector<std::vector<int>> SumRecurrence::tuplesDescending() const {
    std::vector<std::vector<int>> ts;
    for (const auto& [t, c] : coeffs) ts.push_back(t);
    std::sort(ts.begin(), ts.end(), std::greater<>());
    return ts;
}

SumRecurrence sumOver(const KFreeRecurrence& rec) {
    if (!rec.isKFree())
        throw std::invalid_argument("recurrence coefficients are not k-free");
    SumRecurrence sr;
    sr.table = rec.table;
    const uint32_t nv = rec.table.nvars();
    for (const auto& [t, c] : rec.coeffs) {
        std::vector<int> head(t.begin(), t.begin() + static_cast<long>(rec.nRec));
        auto it = sr.coeffs.find(head);
        if (it == sr.coeffs.end()) sr.coeffs.emplace(std::move(head), c);
        else it->second += c;
    }
    for (auto it = sr.coeffs.begin(); it != sr.coeffs.end();)
        it = it->second.isZero() ? sr.coeffs.erase(it) : std::next(it);
    if (sr.coeffs.empty()) throw CollapseError();
    normalizeCoeffs(sr.coeffs, nv);
    return sr;
}

SumRecurrence backwardShifts(const SumRecurrence& rec) {
    if (rec.coeffs.empty()) return rec;
    const size_t len = rec.coeffs.begin()->first.size();
    std::vector<int> m(len, 0);
    bool first = true;
    for (const auto& [t, c] : rec.coeffs) {
        for (size_t i = 0; i < len; ++i)
            m[i] = first ? t[i] : std::min(m[i], t[i]);
        first = false;
    }
    bool identity = true;
    for (int v : m) identity &= (v == 0);
    if (identity) return rec;

    // substitute n -> n + m: tuples drop by m, generators pick up q^{m_l}
    const VarTable& tab = rec.table;
    const uint32_t nv = tab.nvars();
    auto recSyms = tab.symsOfClass(SymClass::Rec);
    assert(recSyms.size() == len);

    struct RawCoeff { std::vector<int> tuple; std::vector<std::pair<Mono, Rational>> terms; };
    std::vector<RawCoeff> raws;
    int64_t minQ = 0;
    for (const auto& [t, c] : rec.coeffs) {
        RawCoeff rc;
        rc.tuple.resize(len);
        for (size_t i = 0; i < len; ++i) rc.tuple[i] = t[i] - m[i];
        for (const Term& term : c.terms()) {
            Mono mono = term.mono;
            int64_t qe = mono[VarTable::QVar];
            for (size_t i = 0; i < len; ++i)
                qe += static_cast<int64_t>(m[i]) * mono[tab.varOf(recSyms[i])];
            minQ = std::min(minQ, qe);
            mono[VarTable::QVar] = static_cast<int32_t>(qe);
            rc.terms.emplace_back(std::move(mono), term.coeff);
        }
        raws.push_back(std::move(rc));
    }
    SumRecurrence out;
    out.table = rec.table;
    for (RawCoeff& rc : raws) {
        std::vector<Term> ts;
        for (auto& [mono, coeff] : rc.terms) {
            mono[VarTable::QVar] -= static_cast<int32_t>(minQ);
            ts.push_back({std::move(mono), coeff});
        }
        out.coeffs[rc.tuple] = MultiPoly::fromTerms(nv, std::move(ts));
    }
    normalizeCoeffs(out.coeffs, nv);
    return out;
}

// ---------------------------------------------------------------------------
// termwise check

namespace {

// map a polynomial into another table's variable space by name
MultiPoly remapPoly(const MultiPoly& p, const VarTable& from, const VarTable& to) {
    std::vector<int32_t> map(from.nvars(), -1);
    auto fromNames = from.varNames();
    auto toNames = to.varNames();
    for (uint32_t v = 0; v < from.nvars(); ++v) {
        for (uint32_t w = 0; w < to.nvars(); ++w)
            if (fromNames[v] == toNames[w]) { map[v] = static_cast<int32_t>(w); break; }
    }
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
        Mono mono(to.nvars(), 0);
        for (uint32_t v = 0; v < from.nvars(); ++v) {
            if (t.mono[v] == 0) continue;
            if (map[v] < 0)
                throw std::invalid_argument("coefficient mentions a symbol unknown to the summand: " +
                                            fromNames[v]);
            mono[static_cast<size_t>(map[v])] = t.mono[v];
        }
        ts.push_back({std::move(mono), t.coeff});
    }
    return MultiPoly::fromTerms(to.nvars(), std::move(ts));
}

bool residualVanishes(const Summand& f, const std::vector<std::vector<int>>& tuples,
                      const std::vector<MultiPoly>& sigmas,
                      const std::vector<std::vector<int>>& sumShifts) {
    const uint32_t nv = f.table().nvars();
    std::vector<FactoredRat> frs;
    for (size_t i = 0; i < tuples.size(); ++i) {
        std::vector<int> full = tuples[i];
        full.insert(full.end(), sumShifts[i].begin(), sumShifts[i].end());
        frs.push_back(f.shiftQuotientFactored(full));
    }
    FactoredRat D = lcmDen(frs, nv);
    MultiPoly acc(nv);
    for (size_t i = 0; i < frs.size(); ++i)
        acc += sigmas[i] * clearedPoly(frs[i], D, nv);
    return acc.isZero();
}

void validateRecVars(const Summand& f, const SumRecurrence& rec) {
    auto a = f.table().symsOfClass(SymClass::Rec);
    auto b = rec.table.symsOfClass(SymClass::Rec);
    if (a.size() != b.size())
        throw std::invalid_argument("recurrence variable count mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (f.table().name(a[i]) != rec.table.name(b[i]))
            throw std::invalid_argument("recurrence variable mismatch: " +
                                        f.table().name(a[i]) + " vs " + rec.table.name(b[i]));
}

} // namespace

TermwiseCertificate checkTermwise(const Summand& f, const SumRecurrence& rec, int window) {
    validateRecVars(f, rec);
    const size_t r = f.table().symsOfClass(SymClass::Sum).size();

    std::vector<std::vector<int>> tuples = rec.tuplesDescending();
    std::vector<MultiPoly> sigmas;
    for (const auto& t : tuples) sigmas.push_back(remapPoly(rec.coeffs.at(t), rec.table, f.table()));

    // per-term candidate shifts sorted by (l1, lex)
    std::vector<std::vector<int>> cands;
    {
        std::vector<int> cur(r, -window);
        if (r == 0) cands.push_back({});
        else while (true) {
            cands.push_back(cur);
            size_t i = r;
            bool done = true;
            while (i > 0) {
                --i;
                if (cur[i] < window) { ++cur[i]; done = false; break; }
                cur[i] = -window;
            }
            if (done) break;
        }
        std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            long la = 0, lb = 0;
            for (int x : a) la += std::abs(x);
            for (int x : b) lb += std::abs(x);
            if (la != lb) return la < lb;
            return a < b;
        });
    }
    std::vector<long> l1(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) {
        long s = 0;
        for (int x : cands[i]) s += std::abs(x);
        l1[i] = s;
    }
    const long maxBudget = static_cast<long>(tuples.size()) * window * static_cast<long>(r ? r : 0);

    std::vector<size_t> pick(tuples.size(), 0);
    TermwiseCertificate cert;
    cert.window = window;
    std::function<bool(size_t, long)> search = [&](size_t term, long budget) -> bool {
        if (term == tuples.size()) {
            if (budget != 0) return false;
            std::vector<std::vector<int>> shifts;
            for (size_t i = 0; i < tuples.size(); ++i) shifts.push_back(cands[pick[i]]);
            if (!residualVanishes(f, tuples, sigmas, shifts)) return false;
            cert.holds = true;
            for (size_t i = 0; i < tuples.size(); ++i) cert.sumShifts[tuples[i]] = shifts[i];
            return true;
        }
        for (size_t c = 0; c < cands.size(); ++c) {
            if (l1[c] > budget) break;
            pick[term] = c;
            if (search(term + 1, budget - l1[c])) return true;
        }
        return false;
    };
    for (long budget = 0; budget <= maxBudget; ++budget)
        if (search(0, budget)) break;
    return cert;
}

bool verifyTermwiseWitness(const Summand& f, const SumRecurrence& rec,
                           const std::map<std::vector<int>, std::vector<int>>& sumShifts) {
    validateRecVars(f, rec);
    std::vector<std::vector<int>> tuples;
    std::vector<MultiPoly> sigmas;
    std::vector<std::vector<int>> shifts;
    for (const auto& [t, c] : rec.coeffs) {
        tuples.push_back(t);
        sigmas.push_back(remapPoly(c, rec.table, f.table()));
        auto it = sumShifts.find(t);
        if (it == sumShifts.end()) return false;
        shifts.push_back(it->second);
    }
    return residualVanishes(f, tuples, sigmas, shifts);
}

std::vector<std::pair<std::vector<int>, std::string>>
vanishingFactorReport(const SumRecurrence& rec) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    auto names = rec.table.varNames();
    for (const auto& [t, c] : rec.coeffs) {
        Mono mc = c.monoContent();
        bool hasMono = false;
        for (int32_t e : mc) hasMono |= (e != 0);
        if (c.termCount() > 1 || hasMono) {
            std::string desc;
            if (hasMono) {
                Mono neg = mc;
                for (int32_t& e : neg) e = -e;
                desc = "monomial factor " + MultiPoly::monomial(c.nvars(), mc, 1).str(names);
                MultiPoly restp = c.mulMono(neg);
                if (restp.termCount() > 1)
                    desc += ", remaining factor " + restp.str(names);
            } else {
                desc = "non-monomial coefficient " + c.str(names);
            }
            out.emplace_back(t, desc);
        }
    }
    return out;
}

BiLaurent coeffAt(const VarTable& table, const MultiPoly& coeff, const std::vector<long>& point) {
    auto recSyms = table.symsOfClass(SymClass::Rec);
    assert(point.size() == recSyms.size());
    // params must not appear; grounds stay symbolic
    BiLaurent acc;
    for (const Term& t : coeff.terms()) {
        int64_t qe = t.mono[VarTable::QVar];
        int64_t ge = 0;
        for (uint32_t v = 1; v < coeff.nvars(); ++v) {
            if (t.mono[v] == 0) continue;
            SymId s = static_cast<SymId>(v - 1);
            if (table.isGround(s)) { ge += t.mono[v]; continue; }
            auto it = std::find(recSyms.begin(), recSyms.end(), s);
            if (it == recSyms.end())
                throw std::invalid_argument("coefficient mentions non-recurrence symbol " + table.name(s));
            qe += static_cast<int64_t>(t.mono[v]) * point[static_cast<size_t>(it - recSyms.begin())];
        }
        acc += BiLaurent::term(qe, ge, t.coeff);
    }
    return acc;
}

BiLaurent relationResidual(const SumRecurrence& rec, const std::vector<long>& point,
                           const std::function<BiLaurent(const std::vector<long>&)>& value) {
    BiLaurent acc;
    for (const auto& [t, c] : rec.coeffs) {
        std::vector<long> arg(point.size());
        for (size_t i = 0; i < point.size(); ++i) arg[i] = point[i] - t[i];
        BiLaurent vc = coeffAt(rec.table, c, point);
        acc += vc * value(arg);
    }
    return acc;
}

} // namespace qcel
