#include "qcel/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <tuple>

namespace qcel::oracle {

QPolynomial qBin(long top, long bottom, long d) {
    if (bottom < 0) return {};
    if (top < 0) {
        // [N ch n] = (-1)^n q^{d(nN - T_{n-1})} [n-N-1 ch n]
        QPolynomial base = qBin(bottom - top - 1, bottom, d);
        int64_t sh = d * (bottom * top - tri(bottom - 1));
        QPolynomial r = base.shifted(sh);
        return bottom % 2 ? -r : r;
    }
    if (bottom > top) return {};
    static std::map<std::tuple<long, long, long>, QPolynomial> cache;
    long b = std::min(bottom, top - bottom);   // symmetry keeps the table small
    auto key = std::make_tuple(top, b, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QPolynomial r;
    if (b == 0) r = QPolynomial(1);
    else // Pascal: [N ch n] = [N-1 ch n] + q^{d(N-n)} [N-1 ch n-1]
        r = qBin(top - 1, b, d) + qBin(top - 1, b - 1, d).shifted(d * (top - b));
    cache.emplace(key, r);
    return r;
}

QPolynomial qMultinomial(long L, const std::vector<long>& parts, long d) {
    QPolynomial r(1);
    long rem = L;
    for (long p : parts) {
        r *= qBin(rem, p, d);
        if (r.isZero()) return r;
        rem -= p;
    }
    return r;
}

QPolynomial gPoly(long i, long j, long k, long L1, long L2, long M) {
    if (i < 0 || j < 0 || k < 0) return {};
    QPolynomial total;
    for (long ab = 0; ab <= std::min(i, j); ++ab)
        for (long ac = 0; ac <= std::min(i - ab, k); ++ac)
            for (long bc = 0; bc <= std::min(j - ab, k - ac); ++bc) {
                long a = i - ab - ac, b = j - ab - bc, c = k - ac - bc;
                long t = a + b + c + ab + ac + bc;
                int64_t e = tri(t) + tri(ab) + tri(ac) + tri(bc - 1);
                QPolynomial common = qBin(L2 - t + b, b);
                common *= qBin(L2 - t, ab);
                common *= qBin(M - t + c, c);
                common *= qBin(M - t, ac);
                if (common.isZero()) continue;
                QPolynomial br1 = qBin(L1 - t + a, a) * qBin(M - t, bc);
                QPolynomial br2 = qBin(L1 - t + a - 1, a - 1) * qBin(M - t, bc - 1);
                total += common * (br1.shifted(e + bc) + br2.shifted(e));
            }
    return total;
}

QPolynomial pPoly(long i, long j, long k, long L1, long L2, long M) {
    if (i < 0 || j < 0 || k < 0) return {};
    QPolynomial total;
    for (long s = 0; s <= std::max({i, j, k}); ++s) {
        int64_t e = s * (M + 2) - tri(s) + tri(i - s) + tri(j - s) + tri(k - s);
        QPolynomial term = qBin(L1 - s, i - s);
        term *= qBin(L2 - i, j - s);
        term *= qBin(L2 - i - j + s, s);
        term *= qBin(M - i - j, k - s);
        total += term.shifted(e);
    }
    return total;
}

QPolynomial rhsDouble(long i, long j, long k, long L, long M) {
    if (i < 0 || j < 0 || k < 0) return {};
    QPolynomial total;
    for (long s = 0; s <= std::max({i, j, k}); ++s) {
        int64_t e = s * (M + 2) - tri(s) + tri(i - s) + tri(j - s) + tri(k - s);
        QPolynomial term = qMultinomial(L - s, {s, i - s, j - s});
        term *= qBin(M - i - j, k - s);
        total += term.shifted(e);
    }
    return total;
}

QPolynomial rhsSingle(long i, long j, long k, long L) {
    if (i < 0 || j < 0 || k < 0) return {};
    QPolynomial r = qBin(L - k, i) * qBin(L - i, j) * qBin(L - j, k);
    return r.shifted(tri(i) + tri(j) + tri(k));
}

// ---------------------------------------------------------------------------
// finite Jacobi / Euler

BiLaurent jacobiLeft(long L) {
    // sum_{l=0..L} a^{-l} q^{T_l} * sum_{m=0..2l} (-a)^m   [the 1/(1+a) is
    // eliminated symbolically; no division happens]
    BiLaurent total;
    for (long l = 0; l <= L; ++l)
        for (long m = 0; m <= 2 * l; ++m)
            total += BiLaurent::term(tri(l), m - l, m % 2 ? -1 : 1);
    return total;
}

static BiLaurent jacobiRight(long L) {
    BiLaurent total;
    for (long i = 0; i <= L; ++i)
        for (long j = 0; i + j <= L; ++j)
            for (long k = 0; k <= L - j && k <= L - i; ++k) {
                QPolynomial b = qBin(L - k, i) * qBin(L - i, j) * qBin(L - j, k);
                if (b.isZero()) continue;
                BiLaurent term = BiLaurent::fromQ(b.shifted(tri(i) + tri(j) + tri(k)));
                total += term * BiLaurent::term(0, i - j, k % 2 ? -1 : 1);
            }
    return total;
}

std::pair<BiLaurent, BiLaurent> jacobiSides(long L) {
    return {jacobiLeft(L), jacobiRight(L)};
}

QPolynomial eulerLeft(long L) {
    QPolynomial total;
    for (long l = 0; l <= L; ++l)
        total += QPolynomial::qpow(2 * (tri(L) - tri(l)));
    return total;
}

static QPolynomial eulerRight(long L) {
    QPolynomial total;
    for (long i = 0; i <= L; ++i)
        for (long j = 0; i + j <= L; ++j)
            for (long k = 0; k <= L - j && k <= L - i; ++k) {
                QPolynomial b = qBin(L - k, i, 2) * qBin(L - i, j, 2) * qBin(L - j, k, 2);
                if (b.isZero()) continue;
                int64_t e = 2 * tri(i) + 2 * tri(j) + 2 * tri(k) - i - j;
                total += (j % 2 ? -b : b).shifted(e);
            }
    return total;
}

std::pair<QPolynomial, QPolynomial> eulerSides(long L) {
    return {eulerLeft(L), eulerRight(L)};
}

// ---------------------------------------------------------------------------

bool stabilizationCheck(long i, long j, long k, long order) {
    if (order < 0) return false;
    long L = order + i + j + k + 2;
    QPolynomial a = gPoly(i, j, k, L, L, L).truncated(order);
    QPolynomial b = gPoly(i, j, k, L + 1, L + 1, L + 1).truncated(order);
    if (a != b) return false;
    // q^{T_i+T_j+T_k} / ((q)_i (q)_j (q)_k) as an iterated geometric series
    QPolynomial series = QPolynomial::qpow(tri(i) + tri(j) + tri(k));
    for (long m : {i, j, k}) {
        for (long t = 1; t <= m; ++t) {
            QPolynomial geo;
            for (long r = 0; t * r <= order; ++r) geo += QPolynomial::qpow(t * r);
            series = (series * geo).truncated(order);
        }
    }
    return a == series;
}

// ---------------------------------------------------------------------------
// grid verification

const std::vector<std::string>& knownIdentities() {
    static const std::vector<std::string> ids = {
        "eq1.15", "eq1.11", "eq1.14", "boundary_g=p_bound", "boundary_bound2",
        "eq5.1", "eq5.2", "finiteJac", "finiteEuler"};
    return ids;
}

std::vector<GridRange> defaultRanges(const std::string& identity) {
    auto ijk = [](long hi) {
        return std::vector<GridRange>{{"i", 0, hi}, {"j", 0, hi}, {"k", 0, hi}};
    };
    if (identity == "eq1.15") {
        auto r = ijk(3);
        r.push_back({"L1", -2, 7});
        r.push_back({"L2", -2, 7});
        r.push_back({"M", -2, 7});
        return r;
    }
    if (identity == "eq1.11") {
        auto r = ijk(3);
        r.push_back({"L", -2, 7});
        r.push_back({"M", -2, 7});
        return r;
    }
    if (identity == "eq1.14") {
        auto r = ijk(3);
        r.push_back({"L", -2, 7});
        return r;
    }
    if (identity == "boundary_g=p_bound") {
        auto r = ijk(3);
        r.push_back({"L1", -2, 7});
        r.push_back({"M", -2, 7});
        return r;
    }
    if (identity == "boundary_bound2") {
        auto r = ijk(3);
        r.push_back({"Delta", -2, 6});
        return r;
    }
    if (identity == "eq5.1") {
        auto r = ijk(3);
        r.push_back({"L1", -2, 7});
        r.push_back({"L2", -2, 7});
        r.push_back({"M", -2, 7});
        return r;
    }
    if (identity == "eq5.2") {
        auto r = ijk(3);
        r.push_back({"L2", -2, 7});
        r.push_back({"M", -2, 7});
        return r;
    }
    if (identity == "finiteJac" || identity == "finiteEuler")
        return {{"L", 0, 8}};
    throw std::invalid_argument("unknown identity: " + identity);
}

namespace {

struct SideValues { BiLaurent lhs, rhs; };

SideValues evalIdentity(const std::string& id, const std::map<std::string, long>& v) {
    auto at = [&](const std::string& n) { return v.at(n); };
    if (id == "eq1.15") {
        return {BiLaurent::fromQ(gPoly(at("i"), at("j"), at("k"), at("L1"), at("L2"), at("M"))),
                BiLaurent::fromQ(pPoly(at("i"), at("j"), at("k"), at("L1"), at("L2"), at("M")))};
    }
    if (id == "eq1.11") {
        return {BiLaurent::fromQ(pPoly(at("i"), at("j"), at("k"), at("L"), at("L"), at("M"))),
                BiLaurent::fromQ(rhsDouble(at("i"), at("j"), at("k"), at("L"), at("M")))};
    }
    if (id == "eq1.14") {
        return {BiLaurent::fromQ(rhsDouble(at("i"), at("j"), at("k"), at("L"), at("L"))),
                BiLaurent::fromQ(rhsSingle(at("i"), at("j"), at("k"), at("L")))};
    }
    if (id == "boundary_g=p_bound") {
        long i = at("i"), j = at("j");
        return {BiLaurent::fromQ(gPoly(i, j, at("k"), at("L1"), i + j - 1, at("M"))),
                BiLaurent::fromQ(pPoly(i, j, at("k"), at("L1"), i + j - 1, at("M")))};
    }
    if (id == "boundary_bound2") {
        long i = at("i"), j = at("j"), k = at("k"), d = at("Delta");
        long M = d + i + j;
        QPolynomial rhs;
        if (i == 0 && j == 0) rhs = qBin(d, k).shifted(tri(k));
        return {BiLaurent::fromQ(gPoly(i, j, k, i + j - 1, i + j - 1, M)),
                BiLaurent::fromQ(rhs)};
    }
    if (id == "eq5.1") {
        long i = at("i"), j = at("j"), k = at("k"), L1 = at("L1"), L2 = at("L2"), M = at("M");
        QPolynomial rhs = gPoly(i, j, k, L1 - 1, L2, M) +
                          gPoly(i - 1, j, k, L1 - 1, L2 - 1, M - 1).shifted(L1);
        return {BiLaurent::fromQ(gPoly(i, j, k, L1, L2, M)), BiLaurent::fromQ(rhs)};
    }
    if (id == "eq5.2") {
        long i = at("i"), j = at("j"), k = at("k"), L2 = at("L2"), M = at("M");
        int64_t e = i * (M + 2) - tri(i) + tri(j - i) + tri(k - i);
        QPolynomial rhs = qBin(L2 - i, j - i) * qBin(L2 - j, i) * qBin(M - i - j, k - i);
        return {BiLaurent::fromQ(gPoly(i, j, k, i - 1, L2, M)),
                BiLaurent::fromQ(rhs.shifted(e))};
    }
    if (id == "finiteJac") {
        auto [l, r] = jacobiSides(at("L"));
        return {l, r};
    }
    if (id == "finiteEuler") {
        auto [l, r] = eulerSides(at("L"));
        return {BiLaurent::fromQ(l), BiLaurent::fromQ(r)};
    }
    throw std::invalid_argument("unknown identity: " + id);
}

} // namespace

GridReport verifyGrid(const std::string& identity, const std::vector<GridRange>& ranges) {
    GridReport rep;
    rep.identity = identity;
    rep.ranges = ranges;
    std::map<std::string, long> point;
    std::vector<long> cur(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i) cur[i] = ranges[i].lo;
    rep.pass = true;
    while (true) {
        for (size_t i = 0; i < ranges.size(); ++i) point[ranges[i].name] = cur[i];
        SideValues sv = evalIdentity(identity, point);
        ++rep.points;
        if (sv.lhs != sv.rhs) {
            rep.pass = false;
            std::vector<std::pair<std::string, long>> cx;
            for (size_t i = 0; i < ranges.size(); ++i) cx.emplace_back(ranges[i].name, cur[i]);
            rep.counterexample = cx;
            rep.lhs = sv.lhs.str();
            rep.rhs = sv.rhs.str();
            return rep;
        }
        size_t i = ranges.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (cur[i] < ranges[i].hi) { ++cur[i]; done = false; break; }
            cur[i] = ranges[i].lo;
        }
        if (done) break;
    }
    return rep;
}

} // namespace qcel::oracle
