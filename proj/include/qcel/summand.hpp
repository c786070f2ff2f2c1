#pragma once

#include "qcel/vartable.hpp"
#include "qcel/ratfunc.hpp"
#include "qcel/qpoly.hpp"

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace qcel {

// ---------------------------------------------------------------------------
// factors of a q-hypergeometric summand

struct QPowFactor { QuadForm exponent; };                       // q^{Q(v)}

struct QBinomFactor {                                           // [top ch bottom]_{q^base}
    LinForm top, bottom;
    int base = 1;
};

struct QPochFactor {                                            // (c*q^{argExp}; q)_{length}^{power}
    LinForm argExp;
    std::optional<SymId> argSym;                                // optional ground multiplier
    LinForm length;
    int power = 1;                                              // +1 or -1
};

struct SymPowFactor {                                           // base^{exponent}
    std::optional<SymId> ground;                                // ground symbol, or -1 when empty
    LinForm exponent;
};

using Factor = std::variant<QPowFactor, QBinomFactor, QPochFactor, SymPowFactor>;

// rational tail: expression tree with leaves c * [ground] * q^{LinForm}
struct TailExpr;
using TailPtr = std::shared_ptr<const TailExpr>;
struct TailExpr {
    enum class Op { Leaf, Add, Sub, Mul, Div };
    Op op = Op::Leaf;
    // leaf payload
    Rational coeff = 1;
    std::optional<SymId> ground;
    LinForm qexp;
    // node payload
    TailPtr lhs, rhs;

    static TailPtr leaf(Rational c, std::optional<SymId> g, LinForm e);
    static TailPtr node(Op op, TailPtr a, TailPtr b);
    bool isOne() const;
};

// ---------------------------------------------------------------------------
// factored rational value: scalar * x^mono * prod factor^mult  (mono Laurent)

struct PolyLess {
    bool operator()(const MultiPoly& a, const MultiPoly& b) const {
        return MultiPoly::cmp(a, b) < 0;
    }
};

struct FactoredRat {
    Rational scalar = 1;                      // 0 encodes the zero value
    std::vector<int64_t> mono;                // per-variable Laurent exponent
    std::map<MultiPoly, int, PolyLess> factors;

    explicit FactoredRat(uint32_t nvars = 0) : mono(nvars, 0) {}
    bool isZero() const { return scalar == 0; }

    void mulScalar(const Rational& c);
    void mulMonoVar(VarId v, int64_t e) { mono[v] += e; }
    // multiply by f^mult; f may be any nonzero polynomial (monomial and
    // content parts are split off into scalar/mono)
    void mulFactor(MultiPoly f, int mult);
    void mul(const FactoredRat& o);
    void div(const FactoredRat& o);

    // split common divisors between numerator and denominator factors so
    // the expansion below is a reduced fraction (pairwise small gcds only)
    void reduceFactors();
    bool isSyntacticOne() const;
    // substitute each generator g_l by q^{-shift_l} g_l (quotient re-based
    // at a shifted point); factors stay canonical
    FactoredRat rescaled(const std::vector<VarId>& genVars, VarId qvar,
                         const std::vector<int>& shift) const;

    // expand to a (num, den) pair with non-negative exponents; no reduction
    std::pair<MultiPoly, MultiPoly> expandRaw(uint32_t nvars) const;
    RatFunc toRatFunc(uint32_t nvars) const;   // reduced canonical form
    MultiPoly expandNum(uint32_t nvars) const; // requires no denominator part
};

// ---------------------------------------------------------------------------

// Symbolic q-hypergeometric summand. Immutable after construction.
class Summand {
public:
    Summand(VarTable table, std::vector<Factor> factors, TailPtr tail);

    const VarTable& table() const { return table_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const TailPtr& tail() const { return tail_; }
    bool tailIsTrivial() const;

    // F(v - shift) / F(v), shift indexed by rec-then-sum symbols
    RatFunc shiftQuotient(const std::vector<int>& shift) const;
    FactoredRat shiftQuotientFactored(const std::vector<int>& shift) const;

    // exact value at an integer point (all integer symbols assigned);
    // throws std::domain_error when a tail denominator vanishes
    BiLaurent evaluate(const std::vector<long>& point) const;

    // R_{s+t}(v) = R_t(v-s) * R_s(v) as rational functions
    bool cocycleCheck(const std::vector<int>& s, const std::vector<int>& t) const;

    // rebuild over a new table; oldToNew[s] gives, for every old integer
    // symbol, its replacement linear form over the new table (identity for
    // untouched symbols). Grounds are matched by name.
    Summand substituted(const VarTable& newTable, const std::vector<LinForm>& oldToNew) const;

private:
    VarTable table_;
    std::vector<Factor> factors_;
    TailPtr tail_;

    // tail compiled at a shift: numerator poly and factored denominator
    struct TailParts { MultiPoly num; FactoredRat den; };
    TailParts compileTail(const std::vector<int>& shift) const;
    std::pair<BiLaurent, BiLaurent> evalTail(const TailPtr& e,
                                             const std::vector<long>& point) const;
};

// full shift vector (rec+sum) from a structure-set tuple
std::vector<int> expandShift(const VarTable& t, const std::vector<int>& tuple);

// polynomial over the table's variables at an integer assignment of every
// integer symbol; ground symbols stay symbolic
BiLaurent polyAtPoint(const VarTable& t, const MultiPoly& p, const std::vector<long>& point);

} // namespace qcel
