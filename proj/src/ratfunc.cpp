#include "qcel/ratfunc.hpp"

#include <cassert>

namespace qcel {

RatFunc::RatFunc(MultiPoly num, MultiPoly den, bool doReduce)
    : num_(std::move(num)), den_(std::move(den)) {
    assert(num_.nvars() == den_.nvars());
    if (den_.isZero()) throw std::domain_error("rational function with zero denominator");
    if (doReduce) reduce();
    else normalizeDen();
}

void RatFunc::normalizeDen() {
    if (num_.isZero()) {
        den_ = MultiPoly(den_.nvars(), 1);
        return;
    }
    // den integer-primitive with positive leading coefficient
    Rational c = den_.content();
    if (den_.leading().coeff < 0) c = -c;
    if (c != 1) {
        num_ = num_.scaled(1 / c);
        den_ = den_.scaled(1 / c);
    }
}

void RatFunc::reduce() {
    if (num_.isZero()) {
        den_ = MultiPoly(den_.nvars(), 1);
        return;
    }
    MultiPoly g = polyGcd(num_, den_);
    if (!g.isConstant()) {
        num_ = divExact(num_, g);
        den_ = divExact(den_, g);
    }
    normalizeDen();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.isZero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatFunc::operator==(const RatFunc& b) const {
    return (num_ * b.den_) == (b.num_ * den_);
}

RatFunc RatFunc::rescaleVar(VarId v, VarId qvar, int32_t qexp) const {
    auto transform = [&](const MultiPoly& p, int64_t& minq) {
        std::vector<Term> ts;
        ts.reserve(p.terms().size());
        for (const Term& t : p.terms()) {
            Term u = t;
            int64_t e = static_cast<int64_t>(u.mono[qvar]) +
                        static_cast<int64_t>(qexp) * u.mono[v];
            minq = std::min(minq, e);
            u.mono[qvar] = static_cast<int32_t>(e);
            ts.push_back(std::move(u));
        }
        return ts;
    };
    int64_t minq = 0;
    auto tn = transform(num_, minq);
    auto td = transform(den_, minq);
    if (minq < 0) {
        for (Term& t : tn) t.mono[qvar] -= static_cast<int32_t>(minq);
        for (Term& t : td) t.mono[qvar] -= static_cast<int32_t>(minq);
    }
    return RatFunc(MultiPoly::fromDistinct(num_.nvars(), std::move(tn)),
                   MultiPoly::fromDistinct(num_.nvars(), std::move(td)));
}

RatFunc ratReduce(MultiPoly num, MultiPoly den) {
    return RatFunc(std::move(num), std::move(den));
}

} // namespace qcel
