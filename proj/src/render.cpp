#include "qcel/render.hpp"

#include <sstream>

namespace qcel {

namespace {

// exponent of q for a monomial, as "const + coeff*sym + ..." (constant first)
std::string expString(const VarTable& t, const Term& term) {
    std::ostringstream os;
    bool first = true;
    int32_t c0 = term.mono[VarTable::QVar];
    if (c0 != 0) { os << c0; first = false; }
    for (SymId s = 0; s < t.intCount(); ++s) {
        int32_t e = term.mono[t.varOf(s)];
        if (e == 0) continue;
        if (first) { if (e < 0) os << "-"; }
        else os << (e < 0 ? " - " : " + ");
        if (std::abs(e) != 1) os << std::abs(e) << "*";
        os << t.name(s);
        first = false;
    }
    return os.str();
}

// one monomial without its sign: rational * q^(...) * grounds
std::string monoBody(const VarTable& t, const Term& term) {
    std::ostringstream os;
    Rational c = abs(term.coeff);
    std::string qs = expString(t, term);
    bool hasQ = !qs.empty();
    std::ostringstream gs;
    bool hasG = false;
    for (SymId s = static_cast<SymId>(t.intCount()); s < t.intCount() + t.groundCount(); ++s) {
        int32_t e = term.mono[t.varOf(s)];
        if (e == 0) continue;
        if (hasG) gs << "*";
        gs << t.name(s);
        if (e != 1) gs << "^" << e;
        hasG = true;
    }
    bool wroteC = false;
    if (c != 1 || (!hasQ && !hasG)) { os << ratToString(c); wroteC = true; }
    if (hasQ) {
        if (wroteC) os << "*";
        os << "q^(" << qs << ")";
    }
    if (hasG) {
        if (wroteC || hasQ) os << "*";
        os << gs.str();
    }
    return os.str();
}

} // namespace

std::string renderPolyExp(const MultiPoly& p, const VarTable& t) {
    if (p.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& term : p.terms()) {
        if (first) { if (term.coeff < 0) os << "-"; }
        else os << (term.coeff < 0 ? " - " : " + ");
        os << monoBody(t, term);
        first = false;
    }
    return os.str();
}

namespace {

std::string renderEquation(const VarTable& t,
                           const std::map<std::vector<int>, MultiPoly>& coeffs,
                           const std::vector<SymId>& argSyms,
                           const std::string& head) {
    std::vector<std::vector<int>> tuples;
    for (const auto& [tp, c] : coeffs) tuples.push_back(tp);
    std::sort(tuples.begin(), tuples.end(), std::greater<>());
    std::ostringstream os;
    bool first = true;
    for (const auto& tp : tuples) {
        const MultiPoly& c = coeffs.at(tp);
        std::string coefStr;
        bool negative = false;
        if (c.termCount() == 1) {
            negative = c.leading().coeff < 0;
            std::string body = monoBody(t, c.leading());
            if (body != "1") coefStr = body + "*";
        } else {
            coefStr = "(" + renderPolyExp(c, t) + ")*";
        }
        if (first) { if (negative) os << "-"; }
        else os << (negative ? " - " : " + ");
        first = false;
        os << coefStr << head << "(";
        for (size_t i = 0; i < argSyms.size(); ++i) {
            if (i) os << ", ";
            if (tp[i] != 0) os << -tp[i] << " + ";
            os << t.name(argSyms[i]);
        }
        os << ")";
    }
    os << " == 0";
    return os.str();
}

} // namespace

std::string renderKFree(const KFreeRecurrence& rec) {
    return renderEquation(rec.table, rec.coeffs, rec.table.shiftSyms(), "F");
}

std::string renderSumRec(const SumRecurrence& rec) {
    return renderEquation(rec.table, rec.coeffs, rec.table.symsOfClass(SymClass::Rec), "SUM");
}

} // namespace qcel
