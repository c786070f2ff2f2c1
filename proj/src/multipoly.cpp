#include "qcel/multipoly.hpp"

#include <unordered_map>
#include <algorithm>
#include <cassert>
#include <sstream>

namespace qcel {

int monoCmp(const Mono& a, const Mono& b) {
    assert(a.size() == b.size());
    int64_t da = 0, db = 0;
    for (int32_t e : a) da += e;
    for (int32_t e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

MultiPoly::MultiPoly(uint32_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.push_back({Mono(nvars, 0), c});
}

MultiPoly MultiPoly::variable(uint32_t nvars, VarId v, int32_t exp) {
    assert(v < nvars);
    Mono m(nvars, 0);
    m[v] = exp;
    return monomial(nvars, m, 1);
}

MultiPoly MultiPoly::monomial(uint32_t nvars, const Mono& m, const Rational& c) {
    MultiPoly p(nvars);
    assert(m.size() == nvars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

bool MultiPoly::isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int32_t e : terms_[0].mono)
        if (e != 0) return false;
    return true;
}

const Term& MultiPoly::leading() const {
    assert(!terms_.empty());
    return terms_.front();
}

int64_t MultiPoly::totalDegree() const {
    if (terms_.empty()) return -1;
    int64_t d = 0;
    for (int32_t e : terms_.front().mono) d += e;
    return d;
}

int32_t MultiPoly::degreeIn(VarId v) const {
    int32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

bool MultiPoly::mentions(VarId v) const {
    for (const Term& t : terms_)
        if (t.mono[v] != 0) return true;
    return false;
}

void MultiPoly::normalizeSorted() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return monoCmp(a.mono, b.mono) > 0; });
}

MultiPoly MultiPoly::fromDistinct(uint32_t nvars, std::vector<Term> ts) {
    MultiPoly p(nvars);
    p.terms_.reserve(ts.size());
    for (Term& t : ts) {
        assert(t.mono.size() == nvars);
        if (t.coeff != 0) p.terms_.push_back(std::move(t));
    }
    p.normalizeSorted();
    return p;
}

MultiPoly MultiPoly::fromTerms(uint32_t nvars, std::vector<Term> ts) {
    std::unordered_map<Mono, Rational, MonoHash> acc;
    for (Term& t : ts) {
        assert(t.mono.size() == nvars);
        auto it = acc.find(t.mono);
        if (it == acc.end()) acc.emplace(std::move(t.mono), std::move(t.coeff));
        else it->second += t.coeff;
    }
    MultiPoly p(nvars);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    p.normalizeSorted();
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// merge of two sorted term lists
static MultiPoly mergeAdd(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    assert(a.nvars() == b.nvars());
    MultiPoly r(a.nvars());
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = monoCmp(ta[i].mono, tb[j].mono);
        if (c > 0) out.push_back(ta[i++]);
        else if (c < 0) {
            out.push_back(tb[j]);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational s = subtract ? Rational(ta[i].coeff - tb[j].coeff)
                                  : Rational(ta[i].coeff + tb[j].coeff);
            if (s != 0) out.push_back({ta[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        out.push_back(tb[j]);
        if (subtract) out.back().coeff = -out.back().coeff;
    }
    return MultiPoly::fromDistinct(a.nvars(), std::move(out));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return mergeAdd(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return mergeAdd(a, b, true); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    assert(a.nvars() == b.nvars());
    if (a.isZero() || b.isZero()) return MultiPoly(a.nvars());
    std::unordered_map<Mono, Rational, MonoHash> acc;
    acc.reserve(a.terms().size() * b.terms().size() / 2 + 4);
    Mono m(a.nvars());
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            for (uint32_t v = 0; v < a.nvars(); ++v) m[v] = ta.mono[v] + tb.mono[v];
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, ta.coeff * tb.coeff);
            else it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mm, c] : acc)
        if (c != 0) out.push_back({mm, std::move(c)});
    return MultiPoly::fromDistinct(a.nvars(), std::move(out));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c == 0) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::mulMono(const Mono& m, const Rational& c) const {
    if (c == 0) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (Term& t : r.terms_) {
        for (uint32_t v = 0; v < nvars_; ++v) {
            t.mono[v] += m[v];
            assert(t.mono[v] >= 0);
        }
        t.coeff *= c;
    }
    r.normalizeSorted();
    return r;
}

MultiPoly MultiPoly::shiftVar(VarId v, int32_t delta) const {
    MultiPoly r = *this;
    for (Term& t : r.terms_) {
        t.mono[v] += delta;
        assert(t.mono[v] >= 0);
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& b) const {
    if (nvars_ != b.nvars_ || terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != b.terms_[i].mono || terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

int MultiPoly::cmp(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        int c = monoCmp(a.terms_[i].mono, b.terms_[i].mono);
        if (c != 0) return c;
        int s = ::cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (s != 0) return s;
    }
    return 0;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    Rational g = 0;
    for (const Term& t : terms_) {
        g = ratGcd(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::primitivePart() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    return scaled(1 / c);
}

Mono MultiPoly::monoContent() const {
    Mono m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_[0].mono;
    for (const Term& t : terms_)
        for (uint32_t v = 0; v < nvars_; ++v)
            m[v] = std::min(m[v], t.mono[v]);
    return m;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    assert(point.size() == nvars_);
    Rational sum = 0;
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (uint32_t i = 0; i < nvars_; ++i) {
            for (int32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool hasVar = false;
        std::ostringstream vs;
        for (uint32_t v = 0; v < nvars_; ++v) {
            if (t.mono[v] == 0) continue;
            if (hasVar) vs << "*";
            vs << (v < names.size() ? names[v] : "x" + std::to_string(v));
            if (t.mono[v] != 1) vs << "^" << t.mono[v];
            hasVar = true;
        }
        if (!hasVar) os << ratToString(c);
        else {
            if (c != 1) os << ratToString(c) << "*";
            os << vs.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// exact division (leading-term long division in graded lex)

bool tryDivExact(const MultiPoly& a, const MultiPoly& b, MultiPoly& out) {
    assert(a.nvars() == b.nvars());
    if (b.isZero()) throw std::domain_error("division by zero polynomial");
    const uint32_t n = a.nvars();
    MultiPoly rem = a;
    std::vector<Term> q;
    const Term& lb = b.leading();
    while (!rem.isZero()) {
        const Term& lr = rem.leading();
        Mono m(n);
        for (uint32_t v = 0; v < n; ++v) {
            m[v] = lr.mono[v] - lb.mono[v];
            if (m[v] < 0) return false;
        }
        Rational c = lr.coeff / lb.coeff;
        q.push_back({m, c});
        rem = rem - b.mulMono(m, c);
    }
    out = MultiPoly::fromTerms(n, std::move(q));
    return true;
}

MultiPoly divExact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!tryDivExact(a, b, q))
        throw std::domain_error("inexact polynomial division");
    return q;
}

// ---------------------------------------------------------------------------
// gcd: primitive PRS, recursive on the highest variable present

namespace {

// view p as univariate in variable v: coefficient polys indexed by exponent
std::vector<MultiPoly> coeffsIn(const MultiPoly& p, VarId v) {
    int32_t d = p.degreeIn(v);
    std::vector<MultiPoly> cs(static_cast<size_t>(d) + 1, MultiPoly(p.nvars()));
    std::vector<std::vector<Term>> buckets(static_cast<size_t>(d) + 1);
    for (const Term& t : p.terms()) {
        Term u = t;
        int32_t e = u.mono[v];
        u.mono[v] = 0;
        buckets[static_cast<size_t>(e)].push_back(std::move(u));
    }
    for (size_t e = 0; e < buckets.size(); ++e)
        cs[e] = MultiPoly::fromTerms(p.nvars(), std::move(buckets[e]));
    return cs;
}

MultiPoly fromCoeffs(const std::vector<MultiPoly>& cs, VarId v, uint32_t nvars) {
    std::vector<Term> ts;
    for (size_t e = 0; e < cs.size(); ++e)
        for (const Term& t : cs[e].terms()) {
            Term u = t;
            u.mono[v] = static_cast<int32_t>(e);
            ts.push_back(std::move(u));
        }
    return MultiPoly::fromTerms(nvars, std::move(ts));
}

int32_t highestVar(const MultiPoly& p) {
    for (int32_t v = static_cast<int32_t>(p.nvars()) - 1; v >= 0; --v)
        if (p.mentions(static_cast<VarId>(v))) return v;
    return -1;
}

MultiPoly gcdRec(const MultiPoly& a, const MultiPoly& b);

// content of p w.r.t. variable v: gcd of its univariate coefficients
MultiPoly contentIn(const MultiPoly& p, VarId v) {
    auto cs = coeffsIn(p, v);
    MultiPoly g(p.nvars());
    for (const MultiPoly& c : cs) {
        if (c.isZero()) continue;
        g = gcdRec(g, c);
        if (g.isConstant() && !g.isZero()) break;
    }
    return g;
}

// pseudo-remainder of a by b in variable v (dega >= degb, b != 0)
MultiPoly prem(MultiPoly a, const MultiPoly& b, VarId v) {
    int32_t db = b.degreeIn(v);
    auto bc = coeffsIn(b, v);
    const MultiPoly& lcb = bc[static_cast<size_t>(db)];
    int32_t da = a.degreeIn(v);
    while (!a.isZero() && (da = a.degreeIn(v)) >= db) {
        auto ac = coeffsIn(a, v);
        const MultiPoly& lca = ac[static_cast<size_t>(da)];
        // a = a*lcb - lca * x^(da-db) * b
        MultiPoly shifted = b;
        shifted = shifted.shiftVar(v, da - db);
        a = a * lcb - lca * shifted;
    }
    return a;
}

MultiPoly normalizeGcd(MultiPoly g) {
    if (g.isZero()) return g;
    g = g.primitivePart();
    if (g.leading().coeff < 0) g = -g;
    return g;
}

MultiPoly gcdRec(const MultiPoly& a, const MultiPoly& b) {
    if (a.isZero()) return normalizeGcd(b);
    if (b.isZero()) return normalizeGcd(a);
    int32_t va = highestVar(a), vb = highestVar(b);
    if (va < 0 || vb < 0) return MultiPoly(a.nvars(), 1);  // nonzero constants
    VarId v = static_cast<VarId>(std::max(va, vb));

    MultiPoly ca = contentIn(a, v), cb = contentIn(b, v);
    MultiPoly pa = divExact(a, ca), pb = divExact(b, cb);
    MultiPoly cg = gcdRec(ca, cb);

    // primitive PRS on the primitive parts
    MultiPoly f = pa, g = pb;
    if (f.degreeIn(v) < g.degreeIn(v)) std::swap(f, g);
    MultiPoly tail(a.nvars());
    while (true) {
        MultiPoly r = prem(f, g, v);
        if (r.isZero()) { tail = std::move(g); break; }
        f = std::move(g);
        MultiPoly rc = contentIn(r, v);
        g = divExact(r, rc);
    }
    tail = divExact(tail, contentIn(tail, v));
    return normalizeGcd(cg * tail);
}

} // namespace

MultiPoly polyGcd(const MultiPoly& a, const MultiPoly& b) {
    assert(a.nvars() == b.nvars());
    return gcdRec(a, b);
}

MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<VarId, MultiPoly>>& assign) {
    MultiPoly acc(p.nvars());
    for (const Term& t : p.terms()) {
        Mono rest = t.mono;
        MultiPoly prod(p.nvars(), t.coeff);
        for (const auto& [v, rep] : assign) {
            int32_t e = rest[v];
            rest[v] = 0;
            for (int32_t i = 0; i < e; ++i) prod = prod * rep;
        }
        acc = acc + prod.mulMono(rest);
    }
    return acc;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<VarId, Rational>>& assign) {
    std::vector<std::pair<VarId, MultiPoly>> a;
    a.reserve(assign.size());
    for (const auto& [v, r] : assign)
        a.emplace_back(v, MultiPoly(p.nvars(), r));
    return substitute(p, a);
}

} // namespace qcel
