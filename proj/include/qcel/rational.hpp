#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace qcel {

// Arbitrary-precision rational, canonical form (gcd(|num|,den)=1, den>0)
// maintained by GMP on every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratFromString(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string ratToString(const Rational& r) { return r.get_str(); }

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

inline long toLong(const Rational& r) {
    if (!isInteger(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational is not a small integer: " + r.get_str());
    return r.get_num().get_si();
}

// gcd on non-negative rationals: gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d)
inline Rational ratGcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class n = gcd(abs(a.get_num()), abs(b.get_num()));
    mpz_class d = lcm(a.get_den(), b.get_den());
    return Rational(n, d);
}

} // namespace qcel
