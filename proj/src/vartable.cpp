#include "qcel/vartable.hpp"

#include <sstream>
#include <cassert>

namespace qcel {

SymId VarTable::add(const std::string& name, SymClass cls) {
    if (byName_.count(name))
        throw std::invalid_argument("duplicate symbol: " + name);
    if (cls == SymClass::Ground) {
        grounds_.push_back(name);
        // ground ids trail the integer ids; adding an integer symbol after a
        // ground would renumber, so parsers declare grounds last
        SymId id = static_cast<SymId>(ints_.size() + grounds_.size() - 1);
        byName_[name] = id;
        return id;
    }
    if (!grounds_.empty())
        throw std::invalid_argument("integer symbols must be declared before grounds");
    ints_.push_back({name, cls});
    SymId id = static_cast<SymId>(ints_.size() - 1);
    byName_[name] = id;
    return id;
}

SymClass VarTable::cls(SymId s) const {
    if (s < ints_.size()) return ints_[s].cls;
    return SymClass::Ground;
}

const std::string& VarTable::name(SymId s) const {
    if (s < ints_.size()) return ints_[s].name;
    return grounds_[s - ints_.size()];
}

std::optional<SymId> VarTable::find(const std::string& n) const {
    auto it = byName_.find(n);
    if (it == byName_.end()) return std::nullopt;
    return it->second;
}

VarId VarTable::varOf(SymId s) const { return 1 + s; }

std::vector<VarId> VarTable::elimVars() const {
    std::vector<VarId> v;
    for (SymId s = 0; s < ints_.size(); ++s)
        if (ints_[s].cls == SymClass::Sum) v.push_back(varOf(s));
    return v;
}

std::vector<SymId> VarTable::symsOfClass(SymClass c) const {
    std::vector<SymId> v;
    for (SymId s = 0; s < ints_.size(); ++s)
        if (ints_[s].cls == c) v.push_back(s);
    if (c == SymClass::Ground)
        for (SymId g = 0; g < grounds_.size(); ++g)
            v.push_back(static_cast<SymId>(ints_.size() + g));
    return v;
}

std::vector<SymId> VarTable::shiftSyms() const {
    std::vector<SymId> v = symsOfClass(SymClass::Rec);
    for (SymId s : symsOfClass(SymClass::Sum)) v.push_back(s);
    return v;
}

std::vector<std::string> VarTable::varNames() const {
    std::vector<std::string> v{"q"};
    for (const auto& e : ints_) v.push_back("q^" + e.name);
    for (const auto& g : grounds_) v.push_back(g);
    return v;
}

bool VarTable::operator==(const VarTable& o) const {
    if (ints_.size() != o.ints_.size() || grounds_ != o.grounds_) return false;
    for (size_t i = 0; i < ints_.size(); ++i)
        if (ints_[i].name != o.ints_[i].name || ints_[i].cls != o.ints_[i].cls)
            return false;
    return true;
}

// ---------------------------------------------------------------------------

LinForm& LinForm::add(const LinForm& o, const Rational& scale) {
    for (const auto& [s, c] : o.coeffs) {
        Rational v = c * scale;
        if (coeffs.count(s)) v += coeffs[s];
        if (v == 0) coeffs.erase(s);
        else coeffs[s] = v;
    }
    constant += o.constant * scale;
    return *this;
}

LinForm LinForm::scaled(const Rational& c) const {
    LinForm l;
    if (c == 0) return l;
    for (const auto& [s, v] : coeffs) l.coeffs[s] = v * c;
    l.constant = constant * c;
    return l;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
    LinForm r = a;
    r.add(b);
    return r;
}

LinForm operator-(const LinForm& a, const LinForm& b) {
    LinForm r = a;
    r.add(b, -1);
    return r;
}

bool LinForm::integerCoeffs() const {
    for (const auto& [s, c] : coeffs)
        if (!isInteger(c)) return false;
    return true;
}

Rational LinForm::evaluate(const std::vector<long>& point) const {
    Rational r = constant;
    for (const auto& [s, c] : coeffs) {
        assert(s < point.size());
        r += c * static_cast<long>(point[s]);
    }
    return r;
}

Rational LinForm::shiftDelta(const std::vector<int>& shift) const {
    Rational r = 0;
    for (const auto& [s, c] : coeffs) {
        if (s < shift.size() && shift[s] != 0) r -= c * shift[s];
    }
    return r;
}

LinForm LinForm::composed(const std::vector<LinForm>& rep) const {
    LinForm r(constant);
    for (const auto& [s, c] : coeffs) {
        assert(s < rep.size());
        r.add(rep[s], c);
    }
    return r;
}

std::string LinForm::str(const VarTable& t) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : coeffs) {
        if (first) {
            if (c < 0) os << "-";
        } else os << (c < 0 ? " - " : " + ");
        Rational a = abs(c);
        if (a != 1) os << ratToString(a) << "*";
        os << t.name(s);
        first = false;
    }
    if (constant != 0 || first) {
        if (first) os << ratToString(constant);
        else os << (constant < 0 ? " - " : " + ") << ratToString(abs(constant));
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void QuadForm::addQuad(SymId u, SymId w, const Rational& c) {
    if (c == 0) return;
    auto key = u <= w ? std::make_pair(u, w) : std::make_pair(w, u);
    Rational v = quad.count(key) ? quad[key] + c : c;
    if (v == 0) quad.erase(key);
    else quad[key] = v;
}

void QuadForm::addProduct(const LinForm& a, const LinForm& b, const Rational& c) {
    if (c == 0) return;
    for (const auto& [u, cu] : a.coeffs)
        for (const auto& [w, cw] : b.coeffs)
            addQuad(u, w, cu * cw * c);
    lin.add(a, b.constant * c);
    lin.add(b, a.constant * c);
    lin.constant -= a.constant * b.constant * c;  // counted twice above
}

void QuadForm::addTriangular(const LinForm& l, const Rational& c) {
    // T(l) = (l^2 + l) / 2
    addProduct(l, l, c / 2);
    lin.add(l, c / 2);
}

Rational QuadForm::evaluate(const std::vector<long>& point) const {
    Rational r = lin.evaluate(point);
    for (const auto& [uw, c] : quad)
        r += c * static_cast<long>(point[uw.first]) * static_cast<long>(point[uw.second]);
    return r;
}

LinForm QuadForm::shiftDiff(const std::vector<int>& shift) const {
    LinForm d;
    for (const auto& [uw, c] : quad) {
        auto [u, w] = uw;
        long su = u < shift.size() ? shift[u] : 0;
        long sw = w < shift.size() ? shift[w] : 0;
        if (u == w) {
            // (x-s)^2 - x^2 = -2 s x + s^2
            if (su != 0) {
                d.add(LinForm::symbol(u), -2 * c * su);
                d.constant += c * su * su;
            }
        } else {
            if (sw != 0) d.add(LinForm::symbol(u), -c * sw);
            if (su != 0) d.add(LinForm::symbol(w), -c * su);
            d.constant += c * su * sw;
        }
    }
    for (const auto& [s, c] : lin.coeffs) {
        long ss = s < shift.size() ? shift[s] : 0;
        if (ss != 0) d.constant -= c * ss;
    }
    return d;
}

QuadForm QuadForm::composed(const std::vector<LinForm>& rep) const {
    QuadForm r;
    for (const auto& [uw, c] : quad)
        r.addProduct(rep[uw.first], rep[uw.second], c);
    r.lin.add(lin.composed(rep));
    return r;
}

void QuadForm::validateIntegerValued(size_t nsyms) const {
    // integer-valued on Z^n iff values at 0, e_u, -e_u, e_u + e_w are integers
    std::vector<long> p(nsyms, 0);
    auto check = [&](const std::vector<long>& pt) {
        if (!isInteger(evaluate(pt)))
            throw std::invalid_argument("q-exponent form is not integer-valued");
    };
    check(p);
    for (size_t u = 0; u < nsyms; ++u) {
        p[u] = 1; check(p);
        p[u] = -1; check(p);
        p[u] = 0;
    }
    for (const auto& [uw, c] : quad) {
        (void)c;
        if (uw.first != uw.second) {
            p[uw.first] = 1; p[uw.second] = 1;
            check(p);
            p[uw.first] = 0; p[uw.second] = 0;
        }
    }
}

} // namespace qcel
