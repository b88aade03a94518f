#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "heckeforge/errors.hpp"

namespace heckeforge {

// Arbitrary-precision rational coefficients. cpp_rational keeps itself in
// lowest terms with a positive denominator, which is everything the scalar
// layer needs from it.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses "p" or "p/q" with optional sign, decimal digits only.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(s)) throw ParseError("bad rational literal: " + s);
            return Rational(Integer(s));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!ok_int(num) || !ok_int(den)) throw ParseError("bad rational literal: " + s);
        Integer d(den);
        if (d == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
        Integer nn(num);
        if (d < 0) {
            nn = -nn;
            d = -d;
        }
        return Rational(nn, d);
    } catch (const std::exception& e) {
        // boost may throw on malformed digit strings; unify the error type
        if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DivisionByZero*>(&e)) throw;
        throw ParseError("bad rational literal: " + s);
    }
}

/// Inverse; cpp_rational's two-argument constructor rejects negative
/// denominators, so the sign moves to the numerator first.
inline Rational rational_inv(const Rational& r) {
    if (r.is_zero()) throw DivisionByZero("inverse of the zero rational");
    Integer n = numerator(r);
    Integer d = denominator(r);
    if (n < 0) {
        n = -n;
        d = -d;
    }
    return Rational(d, n);
}

/// gcd on positive rationals: the largest g with a/g, b/g both integral.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Integer an = numerator(a) < 0 ? Integer(-numerator(a)) : numerator(a);
    Integer bn = numerator(b) < 0 ? Integer(-numerator(b)) : numerator(b);
    if (an == 0) return b < 0 ? Rational(-b) : b;
    if (bn == 0) return a < 0 ? Rational(-a) : a;
    return Rational(gcd(an, bn), lcm(denominator(a), denominator(b)));
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    long n = e;
    if (n < 0) {
        b = rational_inv(base);
        n = -n;
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace heckeforge
