#pragma once

#include "qcel/multipoly.hpp"

namespace qcel {

// Reduced rational function: gcd(num,den)=1 (polynomial part and content),
// den integer-primitive with positive leading coefficient; 0 is 0/1.
class RatFunc {
public:
    RatFunc() : num_(0), den_(0) {}
    explicit RatFunc(uint32_t nvars)
        : num_(nvars), den_(nvars, 1) {}
    RatFunc(MultiPoly num, MultiPoly den, bool reduce = true);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    uint32_t nvars() const { return num_.nvars(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    bool operator==(const RatFunc& b) const;   // value equality (cross-multiplication)
    bool operator!=(const RatFunc& b) const { return !(*this == b); }

    // substitute generator g -> c * q^{e} * g (monomial rescaling); exact,
    // used when re-expressing a quotient at a shifted base point
    RatFunc rescaleVar(VarId v, VarId qvar, int32_t qexp) const;

private:
    MultiPoly num_, den_;
    void reduce();
    void normalizeDen();
};

RatFunc ratReduce(MultiPoly num, MultiPoly den);

} // namespace qcel
