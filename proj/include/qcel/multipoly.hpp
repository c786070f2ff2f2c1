#pragma once

#include "qcel/rational.hpp"

#include <cstdint>
#include <vector>
#include <string>
#include <functional>
#include <iosfwd>

namespace qcel {

using VarId = uint32_t;

// Exponent vector over a fixed variable space. All entries non-negative
// for stored polynomials; Laurent intermediate results keep num/den split.
using Mono = std::vector<int32_t>;

struct MonoHash {
    size_t operator()(const Mono& m) const {
        size_t h = 1469598103934665603ull;
        for (int32_t e : m) {
            h ^= static_cast<uint32_t>(e);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// graded lexicographic: higher total degree first, ties by lex on exponents
int monoCmp(const Mono& a, const Mono& b);

struct Term {
    Mono mono;
    Rational coeff;
};

// Sparse exact multivariate polynomial over Q.
// Terms kept sorted in descending graded-lex order; no zero coefficients.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(uint32_t nvars) : nvars_(nvars) {}
    MultiPoly(uint32_t nvars, const Rational& c);

    static MultiPoly variable(uint32_t nvars, VarId v, int32_t exp = 1);
    static MultiPoly monomial(uint32_t nvars, const Mono& m, const Rational& c);

    uint32_t nvars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    size_t termCount() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading() const;          // greatest term in graded lex
    int64_t totalDegree() const;          // -1 for zero
    int32_t degreeIn(VarId v) const;
    bool mentions(VarId v) const;

    // exact arithmetic
    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly mulMono(const Mono& m, const Rational& c = 1) const;
    // shift every exponent of variable v by delta (must stay >= 0)
    MultiPoly shiftVar(VarId v, int32_t delta) const;

    bool operator==(const MultiPoly& b) const;
    bool operator!=(const MultiPoly& b) const { return !(*this == b); }

    // deterministic total order (for use as map key); not the monomial order
    static int cmp(const MultiPoly& a, const MultiPoly& b);

    // rational content: positive c with p/c integer-primitive; 0 for zero poly
    Rational content() const;
    MultiPoly primitivePart() const;      // content removed, sign kept
    // per-variable minimum exponent over all terms (monomial content)
    Mono monoContent() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // build from unsorted term list (accumulates duplicates, drops zeros)
    static MultiPoly fromTerms(uint32_t nvars, std::vector<Term> ts);
    // terms already distinct; sorts and drops zeros
    static MultiPoly fromDistinct(uint32_t nvars, std::vector<Term> ts);

    std::string str(const std::vector<std::string>& names) const;

private:
    uint32_t nvars_;
    std::vector<Term> terms_;
    void normalizeSorted();
    friend class PolyBuilder;
};

// exact division; throws std::domain_error when not divisible
MultiPoly divExact(const MultiPoly& a, const MultiPoly& b);
bool tryDivExact(const MultiPoly& a, const MultiPoly& b, MultiPoly& out);

// multivariate gcd (primitive PRS, recursing on the highest variable present);
// result integer-primitive with positive leading coefficient; gcd(p,0) = normalized p
MultiPoly polyGcd(const MultiPoly& a, const MultiPoly& b);

// substitute variables; each assignment entry is (var, replacement poly).
// Unassigned variables stay. Replacement polys share the variable space.
MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<VarId, MultiPoly>>& assign);
MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<VarId, Rational>>& assign);

} // namespace qcel
