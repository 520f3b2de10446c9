#include "nodalk3/asymptotics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nodalk3 {

bool dominates(const Monomial& a, const Monomial& b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

EpsPoly::EpsPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

EpsPoly EpsPoly::monomial(const Rational& coefficient, unsigned i, unsigned j) {
  EpsPoly p;
  p.add({i, j}, coefficient);
  return p;
}

void EpsPoly::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> EpsPoly::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

Rational EpsPoly::coefficient(unsigned i, unsigned j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned EpsPoly::totalDegree() const {
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.first + m.second);
  return deg;
}

Monomial EpsPoly::dominantMonomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no dominant monomial");
  Monomial best = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (dominates(m, best)) best = m;
  }
  return best;
}

int EpsPoly::sign() const {
  if (terms_.empty()) return 0;
  return terms_.at(dominantMonomial()) > 0 ? 1 : -1;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

EpsPoly& EpsPoly::operator*=(const EpsPoly& other) {
  EpsPoly product;
  for (const auto& [m, c] : terms_) {
    for (const auto& [n, d] : other.terms_) {
      product.add({m.first + n.first, m.second + n.second}, c * d);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

namespace {

// graded order, used only for division
bool gradedLess(const Monomial& a, const Monomial& b) {
  const unsigned da = a.first + a.second;
  const unsigned db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

Monomial leading(const std::map<Monomial, Rational>& terms) {
  return std::max_element(terms.begin(), terms.end(),
                          [](const auto& x, const auto& y) { return gradedLess(x.first, y.first); })
      ->first;
}

}  // namespace

std::optional<EpsPoly> EpsPoly::divideExact(const EpsPoly& divisor) const {
  if (divisor.isZero()) throw std::domain_error("division by the zero polynomial");
  EpsPoly rest = *this;
  EpsPoly quotient;
  const Monomial lead = leading(divisor.terms_);
  const Rational leadCoeff = divisor.terms_.at(lead);
  while (!rest.isZero()) {
    const Monomial top = leading(rest.terms_);
    if (top.first < lead.first || top.second < lead.second) return std::nullopt;
    const EpsPoly step =
        monomial(rest.terms_.at(top) / leadCoeff, top.first - lead.first, top.second - lead.second);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

Rational EpsPoly::instantiate(const Rational& epsValue, const Rational& epsPrimeValue) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += c * pow(epsValue, m.first) * pow(epsPrimeValue, m.second);
  }
  return sum;
}

std::string EpsPoly::toString() const {
  if (terms_.empty()) return "0";
  // constant first, then in decreasing asymptotic size
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return dominates(x.first, y.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && (m.first != 0 || m.second != 0);
    if (!unit) out << nodalk3::toString(mag);
    bool needStar = !unit;
    if (m.first != 0) {
      if (needStar) out << "*";
      out << "eps";
      if (m.first > 1) out << "^" << m.first;
      needStar = true;
    }
    if (m.second != 0) {
      if (needStar) out << "*";
      out << "eps'";
      if (m.second > 1) out << "^" << m.second;
    }
  }
  return out.str();
}

int sign(const EpsPoly& p) { return p.sign(); }

Rational instantiate(const EpsPoly& p, const Rational& epsValue, const Rational& epsPrimeValue) {
  return p.instantiate(epsValue, epsPrimeValue);
}

EpsRational::EpsRational(EpsPoly numerator, EpsPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void EpsRational::normalize() {
  const int s = den_.sign();
  if (s == 0) throw std::domain_error("denominator vanishes under the infinitesimal ordering");
  if (s < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (auto c = den_.constantValue()) {
    if (*c != 1) {
      num_ *= EpsPoly(Rational(1) / *c);
      den_ = EpsPoly(1);
    }
    return;
  }
  if (num_.isZero()) {
    den_ = EpsPoly(1);
    return;
  }
  if (auto q = num_.divideExact(den_)) {
    num_ = std::move(*q);
    den_ = EpsPoly(1);
  }
}

std::optional<EpsPoly> EpsRational::asPoly() const {
  if (den_.constantValue()) return num_;
  return std::nullopt;
}

EpsRational& EpsRational::operator+=(const EpsRational& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

EpsRational& EpsRational::operator-=(const EpsRational& other) { return *this += -other; }

EpsRational& EpsRational::operator*=(const EpsRational& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

EpsRational& EpsRational::operator/=(const EpsRational& other) {
  if (other.isZero()) throw std::domain_error("division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

EpsRational EpsRational::operator-() const {
  EpsRational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational EpsRational::instantiate(const Rational& epsValue, const Rational& epsPrimeValue) const {
  const Rational d = den_.instantiate(epsValue, epsPrimeValue);
  if (d == 0) throw std::domain_error("denominator vanishes at the given values");
  return num_.instantiate(epsValue, epsPrimeValue) / d;
}

std::string EpsRational::toString() const {
  if (den_.constantValue()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

std::strong_ordering compare(const EpsRational& p, const EpsRational& q) {
  const int s = (p - q).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace nodalk3
