#include "qcel/io.hpp"
#include "qcel/render.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qcel::io {

json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void saveJson(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

namespace {

SymClass classFromString(const std::string& s) {
    if (s == "rec") return SymClass::Rec;
    if (s == "sum") return SymClass::Sum;
    if (s == "param") return SymClass::Param;
    if (s == "ground") return SymClass::Ground;
    throw std::invalid_argument("unknown variable class: " + s);
}

std::string classToString(SymClass c) {
    switch (c) {
    case SymClass::Rec: return "rec";
    case SymClass::Sum: return "sum";
    case SymClass::Param: return "param";
    case SymClass::Ground: return "ground";
    }
    return "?";
}

// resolves names through the substitution environment, then the table
struct NameEnv {
    const VarTable& table;
    std::map<std::string, LinForm> defs;   // substitution name -> expanded form

    LinForm resolve(const std::string& name, const Rational& coeff) const {
        auto it = defs.find(name);
        if (it != defs.end()) return it->second.scaled(coeff);
        auto s = table.find(name);
        if (!s || table.isGround(*s))
            throw std::invalid_argument("unknown integer symbol: " + name);
        return LinForm::symbol(*s).scaled(coeff);
    }
};

LinForm parseLinForm(const json& j, const NameEnv& env) {
    LinForm l;
    if (j.contains("const")) l.constant = ratFromString(j.at("const").get<std::string>());
    if (j.contains("coeffs"))
        for (auto& [name, val] : j.at("coeffs").items())
            l.add(env.resolve(name, ratFromString(val.get<std::string>())));
    return l;
}

QuadForm parseQuadForm(const json& j, const NameEnv& env) {
    QuadForm qf;
    if (j.contains("tri"))
        for (const json& t : j.at("tri"))
            qf.addTriangular(parseLinForm(t.at("arg"), env),
                             ratFromString(t.at("coeff").get<std::string>()));
    if (j.contains("prod"))
        for (const json& t : j.at("prod"))
            qf.addProduct(parseLinForm(t.at("a"), env), parseLinForm(t.at("b"), env),
                          ratFromString(t.at("coeff").get<std::string>()));
    if (j.contains("lin")) qf.addLin(parseLinForm(j.at("lin"), env));
    return qf;
}

std::optional<SymId> parseGroundRef(const json& j, const std::string& key, const NameEnv& env) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    std::string name = j.at(key).get<std::string>();
    auto s = env.table.find(name);
    if (!s || !env.table.isGround(*s))
        throw std::invalid_argument("not a ground symbol: " + name);
    return s;
}

TailPtr parseTail(const json& j, const NameEnv& env) {
    if (j.contains("leaf")) {
        const json& l = j.at("leaf");
        Rational c = l.contains("coeff") ? ratFromString(l.at("coeff").get<std::string>()) : Rational(1);
        auto g = parseGroundRef(l, "sym", env);
        LinForm e = l.contains("qexp") ? parseLinForm(l.at("qexp"), env) : LinForm();
        return TailExpr::leaf(std::move(c), g, std::move(e));
    }
    std::string op = j.at("op").get<std::string>();
    TailExpr::Op o;
    if (op == "add") o = TailExpr::Op::Add;
    else if (op == "sub") o = TailExpr::Op::Sub;
    else if (op == "mul") o = TailExpr::Op::Mul;
    else if (op == "div") o = TailExpr::Op::Div;
    else throw std::invalid_argument("unknown tail op: " + op);
    const json& args = j.at("args");
    if (args.size() < 2) throw std::invalid_argument("tail node needs two operands");
    TailPtr acc = parseTail(args[0], env);
    for (size_t i = 1; i < args.size(); ++i)
        acc = TailExpr::node(o, acc, parseTail(args[i], env));
    return acc;
}

VarTable parseVariables(const json& vars) {
    VarTable t;
    for (const json& v : vars) {
        SymClass c = classFromString(v.at("class").get<std::string>());
        if (c != SymClass::Ground) t.add(v.at("name").get<std::string>(), c);
    }
    for (const json& v : vars) {
        SymClass c = classFromString(v.at("class").get<std::string>());
        if (c == SymClass::Ground) t.add(v.at("name").get<std::string>(), c);
    }
    return t;
}

} // namespace

Summand parseSummand(const json& doc) {
    VarTable t = parseVariables(doc.at("variables"));
    NameEnv env{t, {}};
    if (doc.contains("substitutions"))
        for (const json& s : doc.at("substitutions")) {
            std::string name = s.at("name").get<std::string>();
            if (t.find(name))
                throw std::invalid_argument("substitution shadows a declared symbol: " + name);
            env.defs[name] = parseLinForm(s.at("linform"), env);
        }
    std::vector<Factor> factors;
    for (const json& f : doc.at("factors")) {
        std::string kind = f.at("kind").get<std::string>();
        if (kind == "qpow") {
            factors.push_back(QPowFactor{parseQuadForm(f.at("exponent"), env)});
        } else if (kind == "qbinom") {
            int base = f.contains("base") ? f.at("base").get<int>() : 1;
            if (base <= 0) throw std::invalid_argument("qbinom base must be positive");
            factors.push_back(QBinomFactor{parseLinForm(f.at("top"), env),
                                           parseLinForm(f.at("bottom"), env), base});
        } else if (kind == "qpoch") {
            int power = f.contains("power") ? f.at("power").get<int>() : 1;
            if (power != 1 && power != -1)
                throw std::invalid_argument("qpoch power must be +1 or -1");
            factors.push_back(QPochFactor{parseLinForm(f.at("arg_exp"), env),
                                          parseGroundRef(f, "arg_sym", env),
                                          parseLinForm(f.at("length"), env), power});
        } else if (kind == "sympow") {
            std::string base = f.at("base").get<std::string>();
            std::optional<SymId> g;
            if (base != "-1") {
                g = t.find(base);
                if (!g || !t.isGround(*g))
                    throw std::invalid_argument("sympow base must be a ground symbol or -1");
            }
            factors.push_back(SymPowFactor{g, parseLinForm(f.at("exponent"), env)});
        } else {
            throw std::invalid_argument("unknown factor kind: " + kind);
        }
    }
    TailPtr tail = doc.contains("tail") ? parseTail(doc.at("tail"), env) : nullptr;
    return Summand(std::move(t), std::move(factors), std::move(tail));
}

Summand loadSummand(const std::string& path) { return parseSummand(loadJson(path)); }

// ---------------------------------------------------------------------------

LinForm parseLinFormText(const std::string& text, const VarTable& table) {
    LinForm l;
    size_t i = 0;
    auto skipWs = [&] { while (i < text.size() && isspace(text[i])) ++i; };
    skipWs();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skipWs();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected + or - in linear form: " + text);
        }
        first = false;
        skipWs();
        Rational coeff = sign;
        bool haveNum = false;
        size_t start = i;
        while (i < text.size() && (isdigit(text[i]) || text[i] == '/')) ++i;
        if (i > start) {
            coeff = ratFromString(text.substr(start, i - start)) * sign;
            haveNum = true;
        }
        skipWs();
        if (i < text.size() && text[i] == '*') { ++i; skipWs(); }
        start = i;
        while (i < text.size() && (isalnum(text[i]) || text[i] == '_')) ++i;
        if (i > start) {
            std::string name = text.substr(start, i - start);
            auto s = table.find(name);
            if (!s || table.isGround(*s))
                throw std::invalid_argument("unknown symbol in linear form: " + name);
            l.add(LinForm::symbol(*s), coeff);
        } else if (haveNum) {
            l.constant += coeff;
        } else {
            throw std::invalid_argument("cannot parse linear form: " + text);
        }
        skipWs();
    }
    return l;
}

// ---------------------------------------------------------------------------

StructureSet loadStructureSet(const std::string& path, size_t nRec, size_t nSum) {
    json j = loadJson(path);
    const json& arr = j.contains("tuples") ? j.at("tuples") : j;
    std::vector<std::vector<int>> tuples;
    for (const json& t : arr) tuples.push_back(t.get<std::vector<int>>());
    return parseStructureSet(nRec, nSum, tuples);
}

json structureSetJson(const StructureSet& s) {
    return json{{"schema_version", 1}, {"tuples", s.tuples()}};
}

namespace {

json tableJson(const VarTable& t) {
    json vars = json::array();
    for (SymId s = 0; s < t.intCount() + t.groundCount(); ++s)
        vars.push_back({{"name", t.name(s)}, {"class", classToString(t.cls(s))}});
    return vars;
}

json polyJson(const MultiPoly& p, const VarTable& t) {
    json terms = json::array();
    for (const Term& term : p.terms()) {
        json exps = json::object();
        if (term.mono[VarTable::QVar] != 0) exps["q"] = term.mono[VarTable::QVar];
        for (SymId s = 0; s < t.intCount() + t.groundCount(); ++s)
            if (term.mono[t.varOf(s)] != 0) exps[t.name(s)] = term.mono[t.varOf(s)];
        terms.push_back({{"coeff", ratToString(term.coeff)}, {"exps", exps}});
    }
    return terms;
}

// terms may carry negative exponents; the caller clears them afterwards
struct RawPoly { std::vector<std::pair<std::vector<int64_t>, Rational>> terms; };

RawPoly parsePolyRaw(const json& terms, const VarTable& t) {
    RawPoly rp;
    for (const json& term : terms) {
        std::vector<int64_t> exps(t.nvars(), 0);
        if (term.contains("exps"))
            for (auto& [name, e] : term.at("exps").items()) {
                if (name == "q") { exps[VarTable::QVar] = e.get<int64_t>(); continue; }
                auto s = t.find(name);
                if (!s) throw std::invalid_argument("unknown symbol in polynomial: " + name);
                exps[t.varOf(*s)] = e.get<int64_t>();
            }
        rp.terms.emplace_back(std::move(exps), ratFromString(term.at("coeff").get<std::string>()));
    }
    return rp;
}

std::map<std::vector<int>, MultiPoly>
parseCoeffMap(const json& arr, const VarTable& t, const char* shiftKey) {
    // parse all raw polynomials, then clear a recurrence-wide monomial denominator
    std::vector<std::pair<std::vector<int>, RawPoly>> raw;
    std::vector<int64_t> minExp(t.nvars(), 0);
    for (const json& e : arr) {
        auto shift = e.at(shiftKey).get<std::vector<int>>();
        RawPoly rp = parsePolyRaw(e.at("poly"), t);
        for (const auto& [exps, c] : rp.terms)
            for (size_t v = 0; v < exps.size(); ++v)
                minExp[v] = std::min(minExp[v], exps[v]);
        raw.emplace_back(std::move(shift), std::move(rp));
    }
    std::map<std::vector<int>, MultiPoly> out;
    for (auto& [shift, rp] : raw) {
        std::vector<Term> ts;
        for (auto& [exps, c] : rp.terms) {
            Mono m(t.nvars());
            for (size_t v = 0; v < exps.size(); ++v)
                m[v] = static_cast<int32_t>(exps[v] - minExp[v]);
            ts.push_back({std::move(m), c});
        }
        out[shift] = MultiPoly::fromTerms(t.nvars(), std::move(ts));
    }
    return out;
}

} // namespace

json kfreeJson(const KFreeRecurrence& rec) {
    json coeffs = json::array();
    for (const auto& tp : rec.tuplesDescending())
        coeffs.push_back({{"shift", tp}, {"poly", polyJson(rec.coeffs.at(tp), rec.table)}});
    return json{{"schema_version", 1},
                {"kind", "summand_recurrence"},
                {"variables", tableJson(rec.table)},
                {"coeffs", coeffs},
                {"rendering", renderKFree(rec)}};
}

KFreeRecurrence parseKFree(const json& j) {
    KFreeRecurrence rec;
    rec.table = parseVariables(j.at("variables"));
    rec.nRec = rec.table.symsOfClass(SymClass::Rec).size();
    rec.nSum = rec.table.symsOfClass(SymClass::Sum).size();
    rec.coeffs = parseCoeffMap(j.at("coeffs"), rec.table, "shift");
    return normalize(std::move(rec));
}

json sumRecJson(const SumRecurrence& rec) {
    json coeffs = json::array();
    for (const auto& tp : rec.tuplesDescending())
        coeffs.push_back({{"shift", tp}, {"poly", polyJson(rec.coeffs.at(tp), rec.table)}});
    return json{{"schema_version", 1},
                {"kind", "sum_recurrence"},
                {"variables", tableJson(rec.table)},
                {"coeffs", coeffs},
                {"rendering", renderSumRec(rec)}};
}

SumRecurrence parseSumRec(const json& j) {
    SumRecurrence rec;
    rec.table = parseVariables(j.at("variables"));
    rec.coeffs = parseCoeffMap(j.at("coeffs"), rec.table, "shift");
    normalizeCoeffs(rec.coeffs, rec.table.nvars());
    return rec;
}

json certificateJson(const TermwiseCertificate& c) {
    json shifts = json::array();
    for (const auto& [t, s] : c.sumShifts)
        shifts.push_back({{"term", t}, {"sum_shift", s}});
    return json{{"schema_version", 1},
                {"holds", c.holds},
                {"window", c.window},
                {"shifts", shifts}};
}

TermwiseCertificate parseCertificate(const json& j) {
    TermwiseCertificate c;
    c.holds = j.at("holds").get<bool>();
    c.window = j.at("window").get<int>();
    if (j.contains("shifts"))
        for (const json& e : j.at("shifts"))
            c.sumShifts[e.at("term").get<std::vector<int>>()] =
                e.at("sum_shift").get<std::vector<int>>();
    return c;
}

json gridReportJson(const oracle::GridReport& r) {
    json ranges = json::object();
    for (const auto& g : r.ranges) ranges[g.name] = json::array({g.lo, g.hi});
    json out{{"schema_version", 1},
             {"identity", r.identity},
             {"grid", ranges},
             {"status", r.pass ? "pass" : "fail"},
             {"points", r.points}};
    if (r.counterexample) {
        json cx = json::object();
        for (const auto& [n, v] : *r.counterexample) cx[n] = v;
        out["counterexample"] = {{"point", cx}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

// ---------------------------------------------------------------------------

Summand substituteSummand(const Summand& base,
                          const std::vector<std::pair<std::string, std::string>>& substitutions,
                          const std::vector<std::string>& recVars,
                          const std::vector<std::string>& sumVars) {
    const VarTable& old = base.table();
    std::map<std::string, std::string> substText(substitutions.begin(), substitutions.end());

    // collect the new integer-symbol universe: substituted names disappear,
    // names on the right-hand sides appear
    std::vector<std::string> names;
    auto known = [&](const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    auto classify = [&](const std::string& n) {
        if (std::find(recVars.begin(), recVars.end(), n) != recVars.end()) return SymClass::Rec;
        if (std::find(sumVars.begin(), sumVars.end(), n) != sumVars.end()) return SymClass::Sum;
        return SymClass::Param;
    };
    for (const std::string& n : recVars) names.push_back(n);
    for (const std::string& n : sumVars) {
        if (known(n)) throw std::invalid_argument("symbol classified twice: " + n);
        names.push_back(n);
    }
    for (SymId s = 0; s < old.intCount(); ++s) {
        const std::string& n = old.name(s);
        if (!substText.count(n) && !known(n)) names.push_back(n);
    }
    // names only used inside substitution right-hand sides
    VarTable scratch;   // temporary table to parse rhs text against
    for (const std::string& n : names) scratch.add(n, classify(n));
    std::map<std::string, LinForm> rhs;
    for (const auto& [n, text] : substitutions) {
        try {
            rhs[n] = parseLinFormText(text, scratch);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("substitution for " + n +
                                        " mentions a symbol not in --rec/--sum/params: " + text);
        }
    }
    for (const std::string& n : recVars)
        if (substText.count(n))
            throw std::invalid_argument("cannot keep a substituted symbol as recurrence variable: " + n);

    VarTable fresh = scratch;
    for (SymId g = static_cast<SymId>(old.intCount());
         g < old.intCount() + old.groundCount(); ++g)
        fresh.add(old.name(g), SymClass::Ground);

    std::vector<LinForm> oldToNew(old.intCount());
    for (SymId s = 0; s < old.intCount(); ++s) {
        const std::string& n = old.name(s);
        auto it = rhs.find(n);
        if (it != rhs.end()) oldToNew[s] = it->second;
        else oldToNew[s] = LinForm::symbol(*fresh.find(n));
    }
    return base.substituted(fresh, oldToNew);
}

} // namespace qcel::io
