#pragma once

#include "qcel/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>
#include <string>

namespace qcel {

// Exact univariate Laurent polynomial in q: dense coefficients with an
// offset (lowest exponent). Trimmed on both ends.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(const Rational& c) {
        if (c != 0) { off_ = 0; cs_ = {c}; }
    }
    static QPolynomial qpow(int64_t e, const Rational& c = 1) {
        QPolynomial p;
        if (c != 0) { p.off_ = e; p.cs_ = {c}; }
        return p;
    }

    bool isZero() const { return cs_.empty(); }
    int64_t lowExp() const { return off_; }
    int64_t highExp() const { return off_ + static_cast<int64_t>(cs_.size()) - 1; }
    Rational coeff(int64_t e) const {
        if (isZero() || e < off_ || e > highExp()) return 0;
        return cs_[static_cast<size_t>(e - off_)];
    }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial& operator+=(const QPolynomial& b) { *this = *this + b; return *this; }
    QPolynomial& operator-=(const QPolynomial& b) { *this = *this - b; return *this; }
    QPolynomial& operator*=(const QPolynomial& b) { *this = *this * b; return *this; }
    QPolynomial operator-() const;
    QPolynomial scaled(const Rational& c) const;
    QPolynomial shifted(int64_t e) const;          // multiply by q^e

    bool operator==(const QPolynomial& b) const {
        return (isZero() && b.isZero()) || (off_ == b.off_ && cs_ == b.cs_);
    }
    bool operator!=(const QPolynomial& b) const { return !(*this == b); }

    // exact division; throws std::domain_error if not divisible
    friend QPolynomial divExact(const QPolynomial& a, const QPolynomial& b);

    Rational atOne() const;                        // value at q = 1
    QPolynomial truncated(int64_t maxExp) const;   // drop exponents > maxExp
    std::string str() const;

private:
    int64_t off_ = 0;
    std::vector<Rational> cs_;
    void trim();
};

// Finitely supported exact series in q and one ground symbol.
class BiLaurent {
public:
    using Key = std::pair<int64_t, int64_t>;       // (q exponent, ground exponent)

    BiLaurent() = default;
    BiLaurent(const Rational& c) { if (c != 0) m_[{0, 0}] = c; }
    static BiLaurent term(int64_t qe, int64_t ge, const Rational& c) {
        BiLaurent b;
        if (c != 0) b.m_[{qe, ge}] = c;
        return b;
    }
    static BiLaurent fromQ(const QPolynomial& p);

    bool isZero() const { return m_.empty(); }
    const std::map<Key, Rational>& terms() const { return m_; }
    Rational coeff(int64_t qe, int64_t ge) const;

    friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    BiLaurent& operator+=(const BiLaurent& b) { *this = *this + b; return *this; }
    BiLaurent& operator*=(const BiLaurent& b) { *this = *this * b; return *this; }
    BiLaurent operator-() const;
    BiLaurent scaled(const Rational& c) const;
    bool operator==(const BiLaurent& b) const { return m_ == b.m_; }
    bool operator!=(const BiLaurent& b) const { return !(*this == b); }

    // exact division; throws std::domain_error when not divisible
    friend BiLaurent divExact(const BiLaurent& a, const BiLaurent& b);

    // only valid when no ground symbol appears
    QPolynomial toQ() const;
    std::string str(const std::string& groundName = "a") const;

private:
    std::map<Key, Rational> m_;
};

} // namespace qcel
