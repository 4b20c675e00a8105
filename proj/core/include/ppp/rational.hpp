#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "ppp/errors.hpp"

namespace ppp {

/// Exact rational scalar used for model coefficients, bounds and costs.
/// All values appearing in the models of this library are small (costs,
/// node counts, reactances from case files), so a 64-bit numerator and
/// denominator are ample.
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

/// Smallest integer >= q.
inline std::int64_t rational_ceil(const Rational& q) {
  std::int64_t quot = q.numerator() / q.denominator();
  std::int64_t rem = q.numerator() % q.denominator();
  return rem > 0 ? quot + 1 : quot;
}

/// Largest integer <= q.
inline std::int64_t rational_floor(const Rational& q) {
  std::int64_t quot = q.numerator() / q.denominator();
  std::int64_t rem = q.numerator() % q.denominator();
  return rem < 0 ? quot - 1 : quot;
}

/// Nearest integer to q, halves rounding up.
inline std::int64_t rational_round(const Rational& q) {
  return rational_floor(q + Rational(1, 2));
}

bool is_integral(const Rational& q);

/// Parses a decimal literal ("42", "-0.0576", "9.5e-3") into an exact
/// rational. Mantissas that would overflow 64 bits are rejected unless the
/// value is tiny (|v| < 1e-9, snapped to 0) or can be rounded to a
/// denominator of 10^12 without leaving the representable range.
Rational parse_decimal(const std::string& text);

/// Renders q as the shortest exact decimal when the reduced denominator is
/// of the form 2^a * 5^b, otherwise as a correctly rounded decimal with 17
/// significant digits.
std::string decimal_string(const Rational& q);

}  // namespace ppp
