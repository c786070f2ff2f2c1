#pragma once

#include "qcel/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcel {

using SymId = uint32_t;

enum class SymClass { Rec, Sum, Param, Ground };

// Ordered symbol table. Every integer-valued symbol (rec/sum/param) owns a
// generator variable standing for q^{symbol}; ground symbols are plain
// variables. Polynomial variable space: [ q, generators..., grounds... ].
class VarTable {
public:
    static constexpr VarId QVar = 0;

    SymId add(const std::string& name, SymClass cls);

    size_t intCount() const { return ints_.size(); }
    size_t groundCount() const { return grounds_.size(); }
    uint32_t nvars() const { return 1 + static_cast<uint32_t>(ints_.size() + grounds_.size()); }

    // integer symbols are 0..intCount-1, grounds intCount..intCount+groundCount-1
    SymClass cls(SymId s) const;
    const std::string& name(SymId s) const;
    bool isGround(SymId s) const { return s >= ints_.size(); }
    std::optional<SymId> find(const std::string& name) const;

    VarId varOf(SymId s) const;                    // generator or ground variable
    std::vector<VarId> elimVars() const;           // generators of Sum symbols
    std::vector<SymId> symsOfClass(SymClass c) const;
    // shift-vector layout: rec symbols (table order) then sum symbols
    std::vector<SymId> shiftSyms() const;

    std::vector<std::string> varNames() const;

    bool operator==(const VarTable& o) const;

private:
    struct Entry { std::string name; SymClass cls; };
    std::vector<Entry> ints_;
    std::vector<std::string> grounds_;
    std::map<std::string, SymId> byName_;
};

// Linear form with rational coefficients over integer symbols.
struct LinForm {
    std::map<SymId, Rational> coeffs;   // no zero entries
    Rational constant = 0;

    LinForm() = default;
    explicit LinForm(const Rational& c) : constant(c) {}
    static LinForm symbol(SymId s) { LinForm l; l.coeffs[s] = 1; return l; }

    LinForm& add(const LinForm& o, const Rational& scale = 1);
    LinForm scaled(const Rational& c) const;
    friend LinForm operator+(const LinForm& a, const LinForm& b);
    friend LinForm operator-(const LinForm& a, const LinForm& b);
    bool operator==(const LinForm& o) const { return coeffs == o.coeffs && constant == o.constant; }

    bool isConstant() const { return coeffs.empty(); }
    bool integerCoeffs() const;          // all symbol coefficients integers

    Rational evaluate(const std::vector<long>& point) const;
    // lin(v - s) - lin(v) = -sum coeff_l s_l
    Rational shiftDelta(const std::vector<int>& shift) const;
    // rewrite each symbol through rep[sym] (identity entries allowed)
    LinForm composed(const std::vector<LinForm>& rep) const;

    std::string str(const VarTable& t) const;
};

// Quadratic form: sum of A_uw x_u x_w (u<=w) plus a linear form. Built from
// triangular-number terms T(l)=l(l+1)/2, products of linear forms, and a
// linear tail; integer-valuedness on integer points is validated separately.
struct QuadForm {
    std::map<std::pair<SymId, SymId>, Rational> quad;  // keys u<=w, no zeros
    LinForm lin;

    void addQuad(SymId u, SymId w, const Rational& c);
    void addProduct(const LinForm& a, const LinForm& b, const Rational& c);
    void addTriangular(const LinForm& l, const Rational& c);   // c * T(l)
    void addLin(const LinForm& l, const Rational& c = 1) { lin.add(l, c); }

    bool isLinear() const { return quad.empty(); }
    Rational evaluate(const std::vector<long>& point) const;
    // Q(v - s) - Q(v), a linear form in v
    LinForm shiftDiff(const std::vector<int>& shift) const;
    QuadForm composed(const std::vector<LinForm>& rep) const;

    // throws unless the form takes integer values at all integer points
    void validateIntegerValued(size_t nsyms) const;
};

} // namespace qcel
