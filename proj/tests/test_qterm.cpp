#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcel/io.hpp"
#include "qcel/summand.hpp"

#include <random>

using namespace qcel;

namespace {

Summand loadFixture(const std::string& name) {
    return io::loadSummand(std::string(QCEL_FIXTURES) + "/" + name);
}

size_t countLeaves(const TailPtr& t) {
    if (t->op == TailExpr::Op::Leaf) return 1;
    return countLeaves(t->lhs) + countLeaves(t->rhs);
}

size_t countKind(const Summand& f, size_t idx) {
    size_t n = 0;
    for (const Factor& fac : f.factors())
        if (fac.index() == idx) ++n;
    return n;
}

// value of a reduced rational function at an integer point
BiLaurent ratAtPoint(const VarTable& t, const RatFunc& r, const std::vector<long>& pt) {
    BiLaurent den = polyAtPoint(t, r.den(), pt);
    if (den.isZero()) throw std::domain_error("denominator vanishes at point");
    return divExact(polyAtPoint(t, r.num(), pt), den);
}

} // namespace

TEST_CASE("fixture parsing") {
    Summand gsum = loadFixture("gsum.json");
    CHECK(countKind(gsum, 0) == 1);   // QPow
    CHECK(countKind(gsum, 1) == 6);   // QBinom
    CHECK(countLeaves(gsum.tail()) == 9);
    CHECK_FALSE(gsum.tailIsTrivial());

    Summand psum = loadFixture("psum.json");
    CHECK(countKind(psum, 0) == 1);
    CHECK(countKind(psum, 1) == 4);
    CHECK(psum.tailIsTrivial());

    // constant summand: no factors, tail 1
    VarTable t;
    t.add("n", SymClass::Rec);
    Summand one(t, {}, nullptr);
    CHECK(one.tailIsTrivial());
    CHECK(one.evaluate({5}) == BiLaurent(1));
}

TEST_CASE("shift quotient basics") {
    Summand gsum = loadFixture("gsum.json");
    RatFunc r = gsum.shiftQuotient(std::vector<int>(8, 0));
    CHECK(r.num() == MultiPoly(gsum.table().nvars(), 1));
    CHECK(r.den() == MultiPoly(gsum.table().nvars(), 1));

    // f = q^{T_m}: shift m by 1 gives q^{-m}, i.e. 1/gen(m)
    VarTable t;
    SymId m = t.add("m", SymClass::Rec);
    QuadForm e;
    e.addTriangular(LinForm::symbol(m), 1);
    Summand f(t, {QPowFactor{std::move(e)}}, nullptr);
    RatFunc q = f.shiftQuotient({1});
    CHECK(q.num() == MultiPoly(t.nvars(), 1));
    CHECK(q.den() == MultiPoly::variable(t.nvars(), t.varOf(m)));
}

TEST_CASE("transcribed four-term relation annihilates gsum quotients") {
    Summand gsum = loadFixture("gsum.json");
    const VarTable& t = gsum.table();
    const uint32_t nv = t.nvars();
    VarId Qk = t.varOf(*t.find("k"));
    VarId QL2 = t.varOf(*t.find("L2"));
    auto mono = [&](std::initializer_list<VarId> vs) {
        Mono m(nv, 0);
        for (VarId v : vs) m[v] += 1;
        return MultiPoly::monomial(nv, m, 1);
    };
    struct Row { std::vector<int> shift; MultiPoly sigma; };
    std::vector<Row> rows;
    rows.push_back({{1, 2, 1, 1, 1, 1, 0, 0}, mono({Qk, QL2})});
    rows.push_back({{1, 1, 1, 0, 1, 0, 0, 0}, mono({Qk, QL2})});
    rows.push_back({{0, 1, 0, 0, 0, 0, 0, 0}, mono({Qk})});
    rows.push_back({{0, 0, 0, 0, 0, 0, 0, 0}, -mono({Qk})});
    RatFunc acc(nv);
    for (const Row& r : rows)
        acc = acc + RatFunc(r.sigma, MultiPoly(nv, 1)) * gsum.shiftQuotient(r.shift);
    CHECK(acc.isZero());
}

TEST_CASE("cocycle identity") {
    Summand psum = loadFixture("psum.json");
    std::vector<int> zero(6, 0);
    CHECK(psum.cocycleCheck(zero, zero));
    std::vector<int> si(6, 0), sj(6, 0);
    si[3] = 1;   // unit shift in i
    sj[4] = 1;   // unit shift in j
    CHECK(psum.cocycleCheck(si, sj));

    Summand gsum = loadFixture("gsum.json");
    std::mt19937 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<int> s(8), t(8);
        for (int& x : s) x = static_cast<int>(rng() % 3) - 1;
        for (int& x : t) x = static_cast<int>(rng() % 3) - 1;
        REQUIRE(gsum.cocycleCheck(s, t));
    }
}

TEST_CASE("evaluation") {
    Summand gsum = loadFixture("gsum.json");
    // point order: L1,L2,M,i,j,ab,ac,bc,k
    CHECK(gsum.evaluate({3, 4, 5, 0, 0, 0, 0, 0, 0}) == BiLaurent(1));
    CHECK(gsum.evaluate({-1, 2, 7, 0, 0, 0, 0, 0, 0}) == BiLaurent(1));
    // i=1 (a=1), L1=2, L2=M=5: q * [2 ch 1] = q + q^2
    BiLaurent v = gsum.evaluate({2, 5, 5, 1, 0, 0, 0, 0, 0});
    BiLaurent expect = BiLaurent::term(1, 0, 1) + BiLaurent::term(2, 0, 1);
    CHECK(v == expect);

    Summand psum = loadFixture("psum.json");
    CHECK(psum.evaluate({3, 4, 5, 0, 0, 0, 0}) == BiLaurent(1));
    CHECK(psum.evaluate({2, 5, 5, 1, 0, 0, 0}) == expect);

    // negative bottom index kills the factor
    VarTable t;
    SymId n = t.add("n", SymClass::Rec);
    Summand f(t, {QBinomFactor{LinForm::symbol(n), LinForm(Rational(-1)), 1}}, nullptr);
    CHECK(f.evaluate({4}).isZero());
}

TEST_CASE("quotient agrees with evaluation") {
    Summand gsum = loadFixture("gsum.json");
    const VarTable& tab = gsum.table();
    std::mt19937 rng(9);
    int done = 0;
    while (done < 30) {
        std::vector<long> pt = {long(4 + rng() % 4), long(4 + rng() % 4), long(4 + rng() % 4),
                                long(rng() % 3), long(rng() % 3),
                                long(rng() % 2), long(rng() % 2), long(rng() % 2),
                                long(rng() % 3)};
        std::vector<int> tuple(8);
        for (int& x : tuple) x = static_cast<int>(rng() % 3) - 1;
        try {
            RatFunc r = gsum.shiftQuotient(tuple);
            BiLaurent ratio = ratAtPoint(tab, r, pt);
            std::vector<long> shifted = pt;
            std::vector<int> full = expandShift(tab, tuple);
            for (size_t l = 0; l < full.size(); ++l) shifted[l] -= full[l];
            BiLaurent lhs = gsum.evaluate(shifted);
            BiLaurent rhs = gsum.evaluate(pt) * ratio;
            REQUIRE(lhs == rhs);
            ++done;
        } catch (const std::domain_error&) {
            continue;   // vanishing tail or denominator at this point
        }
    }
}

TEST_CASE("quotient canonical regardless of factor order") {
    Summand gsum = loadFixture("gsum.json");
    std::vector<Factor> rev(gsum.factors().rbegin(), gsum.factors().rend());
    Summand flipped(gsum.table(), std::move(rev), gsum.tail());
    std::vector<int> tuple = {1, 2, 1, 1, 1, 1, 0, 0};
    RatFunc a = gsum.shiftQuotient(tuple);
    RatFunc b = flipped.shiftQuotient(tuple);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
}
