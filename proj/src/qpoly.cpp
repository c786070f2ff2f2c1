#include "qcel/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qcel {

void QPolynomial::trim() {
    size_t lo = 0, hi = cs_.size();
    while (lo < hi && cs_[lo] == 0) ++lo;
    while (hi > lo && cs_[hi - 1] == 0) --hi;
    if (lo == hi) { cs_.clear(); off_ = 0; return; }
    if (lo > 0) cs_.erase(cs_.begin(), cs_.begin() + static_cast<long>(lo));
    cs_.resize(hi - lo);
    off_ += static_cast<int64_t>(lo);
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    int64_t lo = std::min(a.off_, b.off_);
    int64_t hi = std::max(a.highExp(), b.highExp());
    QPolynomial r;
    r.off_ = lo;
    r.cs_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (size_t i = 0; i < a.cs_.size(); ++i) r.cs_[static_cast<size_t>(a.off_ - lo) + i] += a.cs_[i];
    for (size_t i = 0; i < b.cs_.size(); ++i) r.cs_[static_cast<size_t>(b.off_ - lo) + i] += b.cs_[i];
    r.trim();
    return r;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (Rational& c : r.cs_) c = -c;
    return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    QPolynomial r;
    r.off_ = a.off_ + b.off_;
    r.cs_.assign(a.cs_.size() + b.cs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.cs_.size(); ++i) {
        if (a.cs_[i] == 0) continue;
        for (size_t j = 0; j < b.cs_.size(); ++j) {
            if (b.cs_[j] == 0) continue;
            r.cs_[i + j] += a.cs_[i] * b.cs_[j];
        }
    }
    r.trim();
    return r;
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    QPolynomial r = *this;
    for (Rational& x : r.cs_) x *= c;
    return r;
}

QPolynomial QPolynomial::shifted(int64_t e) const {
    QPolynomial r = *this;
    if (!r.isZero()) r.off_ += e;
    return r;
}

QPolynomial divExact(const QPolynomial& a, const QPolynomial& b) {
    if (b.isZero()) throw std::domain_error("QPolynomial division by zero");
    if (a.isZero()) return {};
    if (a.cs_.size() < b.cs_.size()) throw std::domain_error("inexact q-polynomial division");
    QPolynomial q;
    q.off_ = a.off_ - b.off_;
    const size_t m = b.cs_.size();
    q.cs_.assign(a.cs_.size() - m + 1, Rational(0));
    const Rational& lead = b.cs_.back();
    std::vector<Rational> work = a.cs_;
    for (size_t pos = q.cs_.size(); pos-- > 0;) {
        Rational& top = work[pos + m - 1];
        if (top == 0) continue;
        Rational c = top / lead;
        q.cs_[pos] = c;
        for (size_t j = 0; j < m; ++j)
            work[pos + j] -= c * b.cs_[j];
    }
    for (const Rational& w : work)
        if (w != 0) throw std::domain_error("inexact q-polynomial division");
    q.trim();
    return q;
}

Rational QPolynomial::atOne() const {
    Rational s = 0;
    for (const Rational& c : cs_) s += c;
    return s;
}

QPolynomial QPolynomial::truncated(int64_t maxExp) const {
    QPolynomial r = *this;
    if (r.isZero() || r.highExp() <= maxExp) return r;
    if (maxExp < r.off_) return {};
    r.cs_.resize(static_cast<size_t>(maxExp - r.off_ + 1));
    r.trim();
    return r;
}

std::string QPolynomial::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < cs_.size(); ++i) {
        if (cs_[i] == 0) continue;
        Rational c = cs_[i];
        int64_t e = off_ + static_cast<int64_t>(i);
        if (first) { if (c < 0) { os << "-"; c = -c; } }
        else { os << (c < 0 ? " - " : " + "); if (c < 0) c = -c; }
        first = false;
        if (e == 0) os << ratToString(c);
        else {
            if (c != 1) os << ratToString(c) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

BiLaurent BiLaurent::fromQ(const QPolynomial& p) {
    BiLaurent b;
    for (int64_t e = p.lowExp(); !p.isZero() && e <= p.highExp(); ++e) {
        Rational c = p.coeff(e);
        if (c != 0) b.m_[{e, 0}] = c;
    }
    return b;
}

Rational BiLaurent::coeff(int64_t qe, int64_t ge) const {
    auto it = m_.find({qe, ge});
    return it == m_.end() ? Rational(0) : it->second;
}

BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [k, c] : b.m_) {
        auto it = r.m_.find(k);
        if (it == r.m_.end()) r.m_[k] = c;
        else {
            it->second += c;
            if (it->second == 0) r.m_.erase(it);
        }
    }
    return r;
}

BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) { return a + (-b); }

BiLaurent BiLaurent::operator-() const {
    BiLaurent r = *this;
    for (auto& [k, c] : r.m_) c = -c;
    return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ka, ca] : a.m_)
        for (const auto& [kb, cb] : b.m_) {
            BiLaurent::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.m_.find(k);
            if (it == r.m_.end()) r.m_[k] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) r.m_.erase(it);
            }
        }
    return r;
}

BiLaurent BiLaurent::scaled(const Rational& c) const {
    BiLaurent r;
    if (c == 0) return r;
    for (const auto& [k, v] : m_) r.m_[k] = v * c;
    return r;
}

BiLaurent divExact(const BiLaurent& a, const BiLaurent& b) {
    if (b.isZero()) throw std::domain_error("BiLaurent division by zero");
    if (a.isZero()) return {};
    bool bPureQ = true;
    for (const auto& [k, c] : b.m_)
        if (k.second != 0) { bPureQ = false; break; }
    if (bPureQ) {
        // divide each ground-exponent slice by the q-polynomial b
        QPolynomial bq;
        for (const auto& [k, c] : b.m_) bq += QPolynomial::qpow(k.first, c);
        std::map<int64_t, QPolynomial> slices;
        for (const auto& [k, c] : a.m_) slices[k.second] += QPolynomial::qpow(k.first, c);
        BiLaurent q;
        for (const auto& [ge, sl] : slices) {
            QPolynomial d = divExact(sl, bq);
            for (int64_t e = d.lowExp(); !d.isZero() && e <= d.highExp(); ++e) {
                Rational c = d.coeff(e);
                if (c != 0) q.m_[{e, ge}] = c;
            }
        }
        return q;
    }
    BiLaurent rem = a, q;
    const auto lead = *b.m_.rbegin();   // greatest key
    size_t guard = 0;
    while (!rem.isZero()) {
        if (++guard > 1000000) throw std::domain_error("inexact BiLaurent division");
        const auto top = *rem.m_.rbegin();
        BiLaurent::Key k{top.first.first - lead.first.first,
                         top.first.second - lead.first.second};
        Rational c = top.second / lead.second;
        auto it = q.m_.find(k);
        if (it == q.m_.end()) q.m_[k] = c;
        else { it->second += c; if (it->second == 0) q.m_.erase(it); }
        rem = rem - b * BiLaurent::term(k.first, k.second, c);
    }
    return q;
}

QPolynomial BiLaurent::toQ() const {
    QPolynomial p;
    for (const auto& [k, c] : m_) {
        if (k.second != 0)
            throw std::domain_error("BiLaurent mentions the ground symbol");
        p += QPolynomial::qpow(k.first, c);
    }
    return p;
}

std::string BiLaurent::str(const std::string& groundName) const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, cc] : m_) {
        Rational c = cc;
        if (first) { if (c < 0) { os << "-"; c = -c; } }
        else { os << (c < 0 ? " - " : " + "); if (c < 0) c = -c; }
        first = false;
        bool any = false;
        std::ostringstream vs;
        if (k.first != 0) { vs << "q"; if (k.first != 1) vs << "^" << k.first; any = true; }
        if (k.second != 0) {
            if (any) vs << "*";
            vs << groundName;
            if (k.second != 1) vs << "^" << k.second;
            any = true;
        }
        if (!any) os << ratToString(c);
        else { if (c != 1) os << ratToString(c) << "*"; os << vs.str(); }
    }
    return os.str();
}

} // namespace qcel
