#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "slw/errors.hpp"

namespace slw {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: reduced, positive denominator,
// so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw domain_error("rational with zero denominator");
    return Rational(n) / Rational(d); // normalizes negative denominators
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

std::string rat_to_string(const Rational& q);

// Parses "p", "-p", "p/q". Throws domain_error on malformed input.
Rational rat_from_string(const std::string& s);

double rat_to_double(const Rational& q);

} // namespace slw
