#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace nodalk3 {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool isInteger(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Converts an integral rational to int64. Throws std::domain_error otherwise.
std::int64_t toInt64(const Rational& q);

/// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on malformed input.
Rational parseRational(std::string_view text);

/// Canonical "p/q" (or "p") rendering.
std::string toString(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace nodalk3
