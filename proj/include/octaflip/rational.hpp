#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "octaflip/errors.hpp"

namespace octaflip {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer parts. The boost type
/// keeps gcd(|num|, den) = 1 and den > 0 as class invariants, which is
/// exactly the canonical form this project relies on.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// Parses "p" or "p/q" with optional leading '-'. Rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& v);

} // namespace octaflip
