#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "logtb/errors.hpp"

namespace logtb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// Canonical form "p/q" with q > 0, gcd(p, q) = 1. Always carries the
/// denominator so round-trips are bit-exact.
std::string format_rational(const Rational& q);

/// Accepts "p" or "p/q"; q must be nonzero. Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

std::string format_int(const Int& v);
Int parse_int(const std::string& text);

/// Conversion guard for JSON emission; certificates keep integer entries as
/// JSON numbers, which caps them at int64.
std::int64_t to_int64_checked(const Int& v);

}  // namespace logtb
