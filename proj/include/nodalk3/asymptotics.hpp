#pragma once

// Exact polynomials and fractions in two formal infinitesimals eps, eps'
// ordered by 0 < eps' << eps << 1: every positive power of eps' is smaller
// than every power of eps. The ordering decides signs symbolically.

#include "nodalk3/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace nodalk3 {

/// Exponent pair (i, j) of the monomial eps^i eps'^j.
using Monomial = std::pair<unsigned, unsigned>;

/// Whether monomial a is asymptotically larger than monomial b.
bool dominates(const Monomial& a, const Monomial& b);

class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  EpsPoly(std::int64_t c) : EpsPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static EpsPoly monomial(const Rational& coefficient, unsigned i, unsigned j);
  static EpsPoly eps() { return monomial(1, 1, 0); }
  static EpsPoly epsPrime() { return monomial(1, 0, 1); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  /// Constant value, if the polynomial has no eps/eps' terms.
  std::optional<Rational> constantValue() const;
  Rational coefficient(unsigned i, unsigned j) const;
  unsigned totalDegree() const;

  /// The asymptotically largest monomial. Precondition: nonzero.
  Monomial dominantMonomial() const;
  int sign() const;

  EpsPoly& operator+=(const EpsPoly& other);
  EpsPoly& operator-=(const EpsPoly& other);
  EpsPoly& operator*=(const EpsPoly& other);
  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(EpsPoly a, const EpsPoly& b) { return a *= b; }
  EpsPoly operator-() const;

  /// Exact quotient when divisor divides this polynomial, nullopt otherwise.
  std::optional<EpsPoly> divideExact(const EpsPoly& divisor) const;

  Rational instantiate(const Rational& epsValue, const Rational& epsPrimeValue) const;

  std::string toString() const;

  friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

int sign(const EpsPoly& p);
Rational instantiate(const EpsPoly& p, const Rational& epsValue, const Rational& epsPrimeValue);

/// numerator / denominator with the denominator asymptotically positive.
class EpsRational {
 public:
  EpsRational() : den_(1) {}
  EpsRational(const EpsPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  EpsRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  EpsRational(std::int64_t c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when the denominator has sign zero.
  EpsRational(EpsPoly numerator, EpsPoly denominator);

  const EpsPoly& numerator() const { return num_; }
  const EpsPoly& denominator() const { return den_; }

  /// The polynomial value, when the fraction reduces to one.
  std::optional<EpsPoly> asPoly() const;

  int sign() const { return num_.sign(); }
  bool isZero() const { return num_.isZero(); }

  EpsRational& operator+=(const EpsRational& other);
  EpsRational& operator-=(const EpsRational& other);
  EpsRational& operator*=(const EpsRational& other);
  EpsRational& operator/=(const EpsRational& other);
  friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
  friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
  friend EpsRational operator*(EpsRational a, const EpsRational& b) { return a *= b; }
  friend EpsRational operator/(EpsRational a, const EpsRational& b) { return a /= b; }
  EpsRational operator-() const;

  Rational instantiate(const Rational& epsValue, const Rational& epsPrimeValue) const;

  std::string toString() const;

 private:
  void normalize();
  EpsPoly num_;
  EpsPoly den_;
};

/// Asymptotic ordering of p and q.
std::strong_ordering compare(const EpsRational& p, const EpsRational& q);

}  // namespace nodalk3
