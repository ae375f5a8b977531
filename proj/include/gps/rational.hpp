#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gps {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& n) { return n.sign(); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

Rational rational_pow(const Rational& q, long e);

// Floor of a rational as an integer.
Integer rational_floor(const Rational& q);

// Exact n-th root of a nonnegative integer if it is a perfect power.
std::optional<Integer> integer_nth_root(const Integer& v, unsigned n);

// Exact n-th root of a nonnegative rational if numerator and denominator
// are both perfect n-th powers.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

// The rational with smallest denominator in [lo, hi] (Stern-Brocot walk).
// Requires lo <= hi.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

std::string to_string(const Rational& q);

// Parses "p", "p/q" or a decimal literal like "1.41" into an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& q);

} // namespace gps
