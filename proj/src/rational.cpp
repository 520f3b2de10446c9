#include "nodalk3/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace nodalk3 {

std::int64_t toInt64(const Rational& q) {
  if (!isInteger(q)) {
    throw std::domain_error("rational " + toString(q) + " is not an integer");
  }
  const Integer n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const Integer d(std::string{den});
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(Integer(std::string{num}), d);
  return negative ? Rational(-q) : q;
}

std::string toString(const Rational& q) {
  if (isInteger(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace nodalk3
