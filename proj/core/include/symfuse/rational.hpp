#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symfuse {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace symfuse
