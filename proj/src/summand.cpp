#include "qcel/summand.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace qcel {

TailPtr TailExpr::leaf(Rational c, std::optional<SymId> g, LinForm e) {
    auto t = std::make_shared<TailExpr>();
    t->op = Op::Leaf;
    t->coeff = std::move(c);
    t->ground = g;
    t->qexp = std::move(e);
    return t;
}

TailPtr TailExpr::node(Op op, TailPtr a, TailPtr b) {
    auto t = std::make_shared<TailExpr>();
    t->op = op;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

bool TailExpr::isOne() const {
    return op == Op::Leaf && coeff == 1 && !ground && qexp.coeffs.empty() && qexp.constant == 0;
}

// ---------------------------------------------------------------------------
// FactoredRat

void FactoredRat::mulScalar(const Rational& c) {
    scalar *= c;
    if (scalar == 0) { factors.clear(); std::fill(mono.begin(), mono.end(), 0); }
}

void FactoredRat::mulFactor(MultiPoly f, int mult) {
    if (mult == 0 || isZero()) return;
    if (f.isZero()) {
        if (mult < 0) throw std::domain_error("division by zero factor");
        mulScalar(0);
        return;
    }
    // split off monomial content
    Mono mc = f.monoContent();
    bool hasMono = false;
    for (int32_t e : mc) if (e != 0) { hasMono = true; break; }
    if (hasMono) {
        Mono neg = mc;
        for (int32_t& e : neg) e = -e;
        f = f.mulMono(neg);
        for (size_t v = 0; v < mc.size(); ++v) mono[v] += static_cast<int64_t>(mc[v]) * mult;
    }
    // rational content and sign
    Rational c = f.content();
    if (f.leading().coeff < 0) c = -c;
    if (c != 1) {
        f = f.scaled(1 / c);
        for (int k = 0; k < std::abs(mult); ++k) {
            if (mult > 0) scalar *= c;
            else scalar /= c;
        }
    }
    if (f.isConstant()) return;       // fully absorbed
    auto it = factors.find(f);
    if (it == factors.end()) factors.emplace(std::move(f), mult);
    else {
        it->second += mult;
        if (it->second == 0) factors.erase(it);
    }
}

void FactoredRat::mul(const FactoredRat& o) {
    if (isZero()) return;
    if (o.isZero()) { mulScalar(0); return; }
    mulScalar(o.scalar);
    for (size_t v = 0; v < mono.size(); ++v) mono[v] += o.mono[v];
    for (const auto& [f, m] : o.factors) {
        auto it = factors.find(f);
        if (it == factors.end()) factors.emplace(f, m);
        else {
            it->second += m;
            if (it->second == 0) factors.erase(it);
        }
    }
}

void FactoredRat::div(const FactoredRat& o) {
    if (o.isZero()) throw std::domain_error("division by zero factored value");
    if (isZero()) return;
    scalar /= o.scalar;
    for (size_t v = 0; v < mono.size(); ++v) mono[v] -= o.mono[v];
    for (const auto& [f, m] : o.factors) {
        auto it = factors.find(f);
        if (it == factors.end()) factors.emplace(f, -m);
        else {
            it->second -= m;
            if (it->second == 0) factors.erase(it);
        }
    }
}

void FactoredRat::reduceFactors() {
    if (isZero()) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto ni = factors.begin(); ni != factors.end() && !changed; ++ni) {
            if (ni->second <= 0) continue;
            for (auto di = factors.begin(); di != factors.end() && !changed; ++di) {
                if (di->second >= 0) continue;
                MultiPoly g = polyGcd(ni->first, di->first);
                if (g.isConstant()) continue;
                // split both entries through g and restart the scan
                MultiPoly fn = ni->first, fd = di->first;
                int mn = ni->second, md = di->second;
                MultiPoly cn = divExact(fn, g), cd = divExact(fd, g);
                factors.erase(di);
                factors.erase(factors.find(fn));
                mulFactor(g, mn + md);
                mulFactor(cn, mn);
                mulFactor(cd, md);
                changed = true;
            }
        }
    }
}

bool FactoredRat::isSyntacticOne() const {
    if (scalar != 1 || !factors.empty()) return false;
    for (int64_t e : mono)
        if (e != 0) return false;
    return true;
}

FactoredRat FactoredRat::rescaled(const std::vector<VarId>& genVars, VarId qvar,
                                  const std::vector<int>& shift) const {
    FactoredRat out(static_cast<uint32_t>(mono.size()));
    out.scalar = scalar;
    out.mono = mono;
    if (isZero()) return out;
    int64_t dq = 0;
    for (size_t l = 0; l < genVars.size(); ++l)
        dq += static_cast<int64_t>(-shift[l]) * mono[genVars[l]];
    out.mono[qvar] += dq;
    for (const auto& [f, m] : factors) {
        std::vector<Term> ts;
        int64_t minQ = 0;
        for (const Term& t : f.terms()) {
            Term u = t;
            int64_t qe = u.mono[qvar];
            for (size_t l = 0; l < genVars.size(); ++l)
                qe += static_cast<int64_t>(-shift[l]) * u.mono[genVars[l]];
            minQ = std::min(minQ, qe);
            u.mono[qvar] = static_cast<int32_t>(qe);
            ts.push_back(std::move(u));
        }
        for (Term& t : ts) t.mono[qvar] -= static_cast<int32_t>(minQ);
        out.mono[qvar] += minQ * m;   // cleared monomial belongs to the factor
        out.mulFactor(MultiPoly::fromDistinct(f.nvars(), std::move(ts)), m);
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> FactoredRat::expandRaw(uint32_t nvars) const {
    MultiPoly num(nvars, scalar.get_num());
    MultiPoly den(nvars, scalar.get_den());
    if (isZero()) return {MultiPoly(nvars), MultiPoly(nvars, 1)};
    Mono mn(nvars, 0), md(nvars, 0);
    for (uint32_t v = 0; v < nvars; ++v) {
        if (mono[v] > 0) mn[v] = static_cast<int32_t>(mono[v]);
        else md[v] = static_cast<int32_t>(-mono[v]);
    }
    num = num.mulMono(mn);
    den = den.mulMono(md);
    for (const auto& [f, m] : factors) {
        for (int k = 0; k < std::abs(m); ++k) {
            if (m > 0) num = num * f;
            else den = den * f;
        }
    }
    return {std::move(num), std::move(den)};
}

RatFunc FactoredRat::toRatFunc(uint32_t nvars) const {
    FactoredRat r = *this;
    r.reduceFactors();
    auto [n, d] = r.expandRaw(nvars);
    // pairwise-coprime factors expand to a reduced fraction
    return RatFunc(std::move(n), std::move(d), /*reduce=*/false);
}

MultiPoly FactoredRat::expandNum(uint32_t nvars) const {
    for (const auto& [f, m] : factors)
        if (m < 0) throw std::domain_error("factored value has a denominator");
    for (int64_t e : mono)
        if (e < 0) throw std::domain_error("factored value has a monomial denominator");
    auto [n, d] = expandRaw(nvars);
    return divExact(n, d);   // d is the scalar denominator only
}

// ---------------------------------------------------------------------------
// Summand

Summand::Summand(VarTable table, std::vector<Factor> factors, TailPtr tail)
    : table_(std::move(table)), factors_(std::move(factors)), tail_(std::move(tail)) {
    const size_t n = table_.intCount();
    for (const Factor& f : factors_) {
        if (const auto* qp = std::get_if<QPowFactor>(&f))
            qp->exponent.validateIntegerValued(n);
    }
    if (!tail_) tail_ = TailExpr::leaf(1, std::nullopt, LinForm());
}

bool Summand::tailIsTrivial() const { return tail_->isOne(); }

BiLaurent polyAtPoint(const VarTable& t, const MultiPoly& p, const std::vector<long>& point) {
    assert(point.size() == t.intCount());
    BiLaurent acc;
    for (const Term& term : p.terms()) {
        int64_t qe = term.mono[VarTable::QVar];
        int64_t ge = 0;
        for (SymId s = 0; s < t.intCount() + t.groundCount(); ++s) {
            int32_t e = term.mono[t.varOf(s)];
            if (e == 0) continue;
            if (t.isGround(s)) ge += e;
            else qe += static_cast<int64_t>(e) * point[s];
        }
        acc += BiLaurent::term(qe, ge, term.coeff);
    }
    return acc;
}

std::vector<int> expandShift(const VarTable& t, const std::vector<int>& tuple) {
    std::vector<int> shift(t.intCount(), 0);
    auto syms = t.shiftSyms();
    if (tuple.size() != syms.size())
        throw std::invalid_argument("shift tuple length mismatch");
    for (size_t i = 0; i < syms.size(); ++i) shift[syms[i]] = tuple[i];
    return shift;
}

namespace {

// Laurent exponent vector of q^{d * l} over the table's variables; requires
// integral coefficients and constant
std::vector<int64_t> monoOfLin(const VarTable& t, const LinForm& l, long d = 1) {
    std::vector<int64_t> m(t.nvars(), 0);
    Rational c = l.constant * d;
    if (!isInteger(c))
        throw std::domain_error("non-integer q-exponent constant");
    m[VarTable::QVar] = toLong(c);
    for (const auto& [s, cf] : l.coeffs) {
        Rational e = cf * d;
        if (!isInteger(e))
            throw std::domain_error("non-integer q-exponent coefficient");
        m[t.varOf(s)] = toLong(e);
    }
    return m;
}

long integerDelta(const LinForm& l, const std::vector<int>& shift) {
    Rational d = l.shiftDelta(shift);
    if (!isInteger(d))
        throw std::domain_error("non-integer exponent difference under shift");
    return toLong(d);
}

// polynomial 1 - c * x^m with Laurent m: returns factor and clearing monomial
MultiPoly oneMinusMono(uint32_t nvars, const Rational& c, const std::vector<int64_t>& m,
                       std::vector<int64_t>& clearing) {
    Mono pos(nvars, 0), neg(nvars, 0);
    for (uint32_t v = 0; v < nvars; ++v) {
        if (m[v] >= 0) pos[v] = static_cast<int32_t>(m[v]);
        else neg[v] = static_cast<int32_t>(-m[v]);
        clearing[v] = m[v] < 0 ? -m[v] : 0;
    }
    // x^neg - c * x^pos
    std::vector<Term> ts;
    ts.push_back({neg, 1});
    ts.push_back({pos, -c});
    return MultiPoly::fromTerms(nvars, std::move(ts));
}

} // namespace

// multiply fr by (c x^base ; q^d)_delta ^ mult
static void mulPochFinite(FactoredRat& fr, const VarTable& t, const Rational& c,
                          std::vector<int64_t> base, long delta, long d, int mult) {
    if (mult == 0 || delta == 0 || fr.isZero()) return;
    const uint32_t nv = t.nvars();
    std::vector<int64_t> clearing(nv, 0);
    auto emit = [&](long qoff, int sign) {
        std::vector<int64_t> m = base;
        m[VarTable::QVar] += qoff;
        MultiPoly f = oneMinusMono(nv, c, m, clearing);
        fr.mulFactor(std::move(f), sign);
        for (uint32_t v = 0; v < nv; ++v)
            fr.mono[v] -= clearing[v] * sign;   // factor was cleared by x^clearing
    };
    if (delta > 0) {
        for (long j = 0; j < delta; ++j) emit(d * j, mult);
    } else {
        for (long j = 1; j <= -delta; ++j) emit(-d * j, -mult);
    }
}

// ratio (q^d; q^d)_{m+delta} / (q^d; q^d)_m  ==  (q^{d(m+1)}; q^d)_delta
static void mulQPochRatio(FactoredRat& fr, const VarTable& t, const LinForm& m,
                          long delta, long d, int mult) {
    if (delta == 0 || mult == 0) return;
    LinForm arg = m;
    arg.constant += 1;
    mulPochFinite(fr, t, 1, monoOfLin(t, arg, d), delta, d, mult);
}

FactoredRat Summand::shiftQuotientFactored(const std::vector<int>& tuple) const {
    const std::vector<int> shift = expandShift(table_, tuple);
    const uint32_t nv = table_.nvars();
    FactoredRat fr(nv);
    for (const Factor& fac : factors_) {
        if (const auto* qp = std::get_if<QPowFactor>(&fac)) {
            LinForm diff = qp->exponent.shiftDiff(shift);
            auto m = monoOfLin(table_, diff);
            for (uint32_t v = 0; v < nv; ++v) fr.mono[v] += m[v];
        } else if (const auto* qb = std::get_if<QBinomFactor>(&fac)) {
            long dT = integerDelta(qb->top, shift);
            long dB = integerDelta(qb->bottom, shift);
            mulQPochRatio(fr, table_, qb->top, dT, qb->base, +1);
            mulQPochRatio(fr, table_, qb->bottom, dB, qb->base, -1);
            mulQPochRatio(fr, table_, qb->top - qb->bottom, dT - dB, qb->base, -1);
        } else if (const auto* qc = std::get_if<QPochFactor>(&fac)) {
            long dA = integerDelta(qc->argExp, shift);
            long dN = integerDelta(qc->length, shift);
            auto baseMono = [&](long extraQ, bool addLen) {
                LinForm e = qc->argExp;
                e.constant += extraQ;
                if (addLen) e.add(qc->length);
                auto m = monoOfLin(table_, e);
                if (qc->argSym) m[table_.varOf(*qc->argSym)] += 1;
                return m;
            };
            // (A q^{dA}; q)_{n+dN} / (A; q)_n
            //   = (A q^{dA+n}; q)_{dN} * (A q^n; q)_{dA} / (A; q)_{dA}
            mulPochFinite(fr, table_, 1, baseMono(dA, true), dN, 1, qc->power);
            mulPochFinite(fr, table_, 1, baseMono(0, true), dA, 1, qc->power);
            mulPochFinite(fr, table_, 1, baseMono(0, false), dA, 1, -qc->power);
        } else if (const auto* sp = std::get_if<SymPowFactor>(&fac)) {
            long d = integerDelta(sp->exponent, shift);
            if (sp->ground) fr.mono[table_.varOf(*sp->ground)] += d;
            else if (d % 2 != 0) fr.mulScalar(-1);
        }
    }
    if (!tailIsTrivial()) {
        TailParts shifted = compileTail(shift);
        TailParts base = compileTail(std::vector<int>(table_.intCount(), 0));
        fr.mulFactor(shifted.num, +1);
        fr.mul(base.den);
        fr.mulFactor(base.num, -1);
        fr.div(shifted.den);
    }
    return fr;
}

RatFunc Summand::shiftQuotient(const std::vector<int>& shift) const {
    return shiftQuotientFactored(shift).toRatFunc(table_.nvars());
}

Summand::TailParts Summand::compileTail(const std::vector<int>& shift) const {
    const uint32_t nv = table_.nvars();
    struct V { MultiPoly num; FactoredRat den; };
    std::function<V(const TailPtr&)> go = [&](const TailPtr& e) -> V {
        if (e->op == TailExpr::Op::Leaf) {
            LinForm l = e->qexp;
            l.constant += integerDelta(l, shift);
            auto m = monoOfLin(table_, l);
            if (e->ground) m[table_.varOf(*e->ground)] += 1;
            Mono pos(nv, 0);
            FactoredRat den(nv);
            for (uint32_t v = 0; v < nv; ++v) {
                if (m[v] >= 0) pos[v] = static_cast<int32_t>(m[v]);
                else den.mono[v] = -m[v];
            }
            return {MultiPoly::monomial(nv, pos, e->coeff), std::move(den)};
        }
        V a = go(e->lhs), b = go(e->rhs);
        V r{MultiPoly(nv), FactoredRat(nv)};
        switch (e->op) {
        case TailExpr::Op::Mul:
            r.num = a.num * b.num;
            r.den = std::move(a.den);
            r.den.mul(b.den);
            break;
        case TailExpr::Op::Div: {
            // (a.num/a.den) / (b.num/b.den) = a.num * expand(b.den) / (a.den * b.num)
            auto [bn, bd] = b.den.expandRaw(nv);
            r.num = a.num * bn;
            r.den = std::move(a.den);
            r.den.mulFactor(b.num, +1);
            r.den.mulFactor(bd, +1);   // scalar denominator of expand(b.den)
            break;
        }
        case TailExpr::Op::Add:
        case TailExpr::Op::Sub: {
            // common denominator: a.den * (b.den / common); expand cofactors
            FactoredRat quotA = b.den;  // b.den / gcd-multiset
            quotA.div(a.den);
            // quotA = b.den / a.den: positive part multiplies a.num, negative part b.num
            FactoredRat extraA(nv), extraB(nv);
            for (auto& [f, mlt] : quotA.factors) {
                if (mlt > 0) extraA.mulFactor(f, mlt);
                else extraB.mulFactor(f, -mlt);
            }
            for (uint32_t v = 0; v < nv; ++v) {
                int64_t d = quotA.mono[v];
                if (d > 0) extraA.mono[v] = d;
                else extraB.mono[v] = -d;
            }
            extraA.mulScalar(quotA.scalar.get_num());
            extraB.mulScalar(quotA.scalar.get_den());
            MultiPoly na = a.num * extraA.expandNum(nv);
            MultiPoly nb = b.num * extraB.expandNum(nv);
            r.num = e->op == TailExpr::Op::Add ? na + nb : na - nb;
            r.den = std::move(a.den);
            r.den.mul(extraA);   // a.den * extraA == lcm-ish common denominator
            break;
        }
        default:
            throw std::logic_error("bad tail node");
        }
        return r;
    };
    V v = go(tail_);
    if (v.num.isZero()) throw std::domain_error("tail is identically zero");
    return {std::move(v.num), std::move(v.den)};
}

// tail values are carried as (num, den) pairs; the division is performed
// once at the end where the full product makes it exact
std::pair<BiLaurent, BiLaurent> Summand::evalTail(const TailPtr& e,
                                                  const std::vector<long>& point) const {
    if (e->op == TailExpr::Op::Leaf) {
        Rational qe = e->qexp.evaluate(point);
        if (!isInteger(qe)) throw std::domain_error("non-integer tail exponent");
        return {BiLaurent::term(toLong(qe), e->ground ? 1 : 0, e->coeff), BiLaurent(1)};
    }
    auto [an, ad] = evalTail(e->lhs, point);
    auto [bn, bd] = evalTail(e->rhs, point);
    switch (e->op) {
    case TailExpr::Op::Add: return {an * bd + bn * ad, ad * bd};
    case TailExpr::Op::Sub: return {an * bd - bn * ad, ad * bd};
    case TailExpr::Op::Mul: return {an * bn, ad * bd};
    case TailExpr::Op::Div: return {an * bd, ad * bn};
    default: throw std::logic_error("bad tail node");
    }
}

namespace {

// (q^{d(m+1)}; q^d)_n / (q^d; q^d)_n with integer m, n — the generalized
// q-binomial [m+n ch n], evaluated literally from the Pochhammer definition
BiLaurent evalQBinom(long top, long bottom, long d) {
    if (bottom < 0) return {};
    QPolynomial num(1), den(1);
    for (long j = 0; j < bottom; ++j) {
        // (1 - q^{d(top-bottom+1+j)}) / (1 - q^{d(1+j)})
        num *= QPolynomial(1) - QPolynomial::qpow(d * (top - bottom + 1 + j));
        den *= QPolynomial(1) - QPolynomial::qpow(d * (1 + j));
    }
    return BiLaurent::fromQ(divExact(num, den));
}

// three-case (c q^{a}; q)_n with ground tracked in the BiLaurent
BiLaurent evalQPoch(long a, bool ground, long n) {
    BiLaurent r(1);
    if (n > 0) {
        for (long j = 0; j < n; ++j)
            r *= BiLaurent(1) - BiLaurent::term(a + j, ground ? 1 : 0, 1);
        return r;
    }
    if (n == 0) return r;
    BiLaurent den(1);
    for (long j = 1; j <= -n; ++j)
        den *= BiLaurent(1) - BiLaurent::term(a - j, ground ? 1 : 0, 1);
    if (den.isZero()) throw std::domain_error("q-Pochhammer with vanishing inverse factor");
    return divExact(r, den);
}

} // namespace

BiLaurent Summand::evaluate(const std::vector<long>& point) const {
    assert(point.size() == table_.intCount());
    BiLaurent val(1);
    for (const Factor& fac : factors_) {
        if (val.isZero()) return val;
        if (const auto* qp = std::get_if<QPowFactor>(&fac)) {
            Rational e = qp->exponent.evaluate(point);
            if (!isInteger(e)) throw std::domain_error("non-integer q-power at point");
            val *= BiLaurent::term(toLong(e), 0, 1);
        } else if (const auto* qb = std::get_if<QBinomFactor>(&fac)) {
            long t = toLong(qb->top.evaluate(point));
            long b = toLong(qb->bottom.evaluate(point));
            val *= evalQBinom(t, b, qb->base);
        } else if (const auto* qc = std::get_if<QPochFactor>(&fac)) {
            long a = toLong(qc->argExp.evaluate(point));
            long n = toLong(qc->length.evaluate(point));
            BiLaurent p = evalQPoch(a, qc->argSym.has_value(), n);
            if (qc->power < 0) {
                if (p.isZero()) throw std::domain_error("inverse q-Pochhammer vanishes");
                val = divExact(val, p);
            } else val *= p;
        } else if (const auto* sp = std::get_if<SymPowFactor>(&fac)) {
            long e = toLong(sp->exponent.evaluate(point));
            if (sp->ground) val *= BiLaurent::term(0, e, 1);
            else if (e % 2 != 0) val = val.scaled(-1);
        }
    }
    if (!tailIsTrivial()) {
        auto [tn, td] = evalTail(tail_, point);
        if (td.isZero()) throw std::domain_error("tail denominator vanishes at point");
        val = divExact(val * tn, td);
    }
    return val;
}

bool Summand::cocycleCheck(const std::vector<int>& s, const std::vector<int>& t) const {
    std::vector<int> st(s.size());
    for (size_t i = 0; i < s.size(); ++i) st[i] = s[i] + t[i];
    const std::vector<int> full = expandShift(table_, s);
    std::vector<VarId> genVars(table_.intCount());
    for (SymId l = 0; l < table_.intCount(); ++l) genVars[l] = table_.varOf(l);

    FactoredRat lhs = shiftQuotientFactored(st);
    // R_t re-based at v - s: generator for q^{v_l} becomes q^{-s_l} g
    FactoredRat rhs = shiftQuotientFactored(t).rescaled(genVars, VarTable::QVar, full);
    rhs.mul(shiftQuotientFactored(s));
    if (lhs.isZero() || rhs.isZero()) return lhs.isZero() == rhs.isZero();
    FactoredRat diff = lhs;
    diff.div(rhs);
    if (diff.isSyntacticOne()) return true;
    // fall back to value equality by cross multiplication (no reduction)
    const uint32_t nv = table_.nvars();
    auto [ln, ld] = lhs.expandRaw(nv);
    auto [rn, rd] = rhs.expandRaw(nv);
    return ln * rd == rn * ld;
}

Summand Summand::substituted(const VarTable& newTable, const std::vector<LinForm>& oldToNew) const {
    assert(oldToNew.size() == table_.intCount());
    auto mapGround = [&](std::optional<SymId> g) -> std::optional<SymId> {
        if (!g) return std::nullopt;
        auto n = newTable.find(table_.name(*g));
        if (!n || newTable.cls(*n) != SymClass::Ground)
            throw std::invalid_argument("ground symbol missing from new table: " + table_.name(*g));
        return n;
    };
    std::vector<Factor> nf;
    nf.reserve(factors_.size());
    for (const Factor& fac : factors_) {
        if (const auto* qp = std::get_if<QPowFactor>(&fac)) {
            nf.push_back(QPowFactor{qp->exponent.composed(oldToNew)});
        } else if (const auto* qb = std::get_if<QBinomFactor>(&fac)) {
            nf.push_back(QBinomFactor{qb->top.composed(oldToNew), qb->bottom.composed(oldToNew), qb->base});
        } else if (const auto* qc = std::get_if<QPochFactor>(&fac)) {
            nf.push_back(QPochFactor{qc->argExp.composed(oldToNew), mapGround(qc->argSym),
                                     qc->length.composed(oldToNew), qc->power});
        } else if (const auto* sp = std::get_if<SymPowFactor>(&fac)) {
            nf.push_back(SymPowFactor{mapGround(sp->ground), sp->exponent.composed(oldToNew)});
        }
    }
    std::function<TailPtr(const TailPtr&)> goTail = [&](const TailPtr& e) -> TailPtr {
        if (e->op == TailExpr::Op::Leaf)
            return TailExpr::leaf(e->coeff, mapGround(e->ground), e->qexp.composed(oldToNew));
        return TailExpr::node(e->op, goTail(e->lhs), goTail(e->rhs));
    };
    return Summand(newTable, std::move(nf), goTail(tail_));
}

} // namespace qcel
