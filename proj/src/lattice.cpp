#include "nodalk3/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nodalk3 {

NSLattice::NSLattice(std::int64_t hSquared, bool classGroupNontrivial)
    : h_squared_(hSquared), class_group_nontrivial_(classGroupNontrivial) {
  if (hSquared <= 0 || hSquared % 2 != 0) {
    throw std::invalid_argument("H^2 must be a positive even integer, got " +
                                std::to_string(hSquared));
  }
  if (classGroupNontrivial && hSquared % 8 != 2) {
    throw std::invalid_argument("a nontrivial class group requires H^2 = 2 mod 8, got H^2 = " +
                                std::to_string(hSquared));
  }
}

bool NSLattice::contains(std::int64_t k1, std::int64_t e1) const {
  if ((k1 - e1) % 2 != 0) return false;
  if (!class_group_nontrivial_ && k1 % 2 != 0) return false;
  return true;
}

DivisorClass::DivisorClass(const NSLattice& lattice, std::int64_t k1, std::int64_t e1)
    : lattice_(lattice), k1_(k1), e1_(e1) {
  if (!lattice.contains(k1, e1)) {
    throw std::invalid_argument("(" + std::to_string(k1) + "H + " + std::to_string(e1) +
                                "L)/2 is not a class of the lattice");
  }
}

std::optional<DivisorClass> DivisorClass::fromCoefficients(const NSLattice& lattice,
                                                           const Rational& hCoeff,
                                                           const Rational& lCoeff) {
  const Rational k1 = 2 * hCoeff;
  const Rational e1 = 2 * lCoeff;
  if (!isInteger(k1) || !isInteger(e1)) return std::nullopt;
  const auto k = toInt64(k1);
  const auto e = toInt64(e1);
  if (!lattice.contains(k, e)) return std::nullopt;
  return DivisorClass(lattice, k, e);
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  if (!(lattice_ == other.lattice_)) throw std::invalid_argument("mismatched lattices");
  return {lattice_, k1_ + other.k1_, e1_ + other.e1_};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  if (!(lattice_ == other.lattice_)) throw std::invalid_argument("mismatched lattices");
  return {lattice_, k1_ - other.k1_, e1_ - other.e1_};
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.lattice() == b.lattice())) throw std::invalid_argument("mismatched lattices");
  const Integer num = Integer(a.k1()) * b.k1() * a.lattice().hSquared() -
                      2 * Integer(a.e1()) * b.e1();
  return Rational(num, 4);
}

MukaiVector::MukaiVector(std::int64_t rank, DivisorClass divisor, std::int64_t degree)
    : rank_(rank), divisor_(std::move(divisor)), degree_(degree) {}

std::optional<MukaiVector> MukaiVector::fromRational(const NSLattice& lattice,
                                                     const Rational& rank,
                                                     const Rational& hCoeff,
                                                     const Rational& lCoeff,
                                                     const Rational& degree) {
  if (!isInteger(rank) || !isInteger(degree)) return std::nullopt;
  auto divisor = DivisorClass::fromCoefficients(lattice, hCoeff, lCoeff);
  if (!divisor) return std::nullopt;
  return MukaiVector(toInt64(rank), *divisor, toInt64(degree));
}

Rational MukaiVector::square() const { return mukaiPair(*this, *this); }

MukaiVector MukaiVector::operator+(const MukaiVector& other) const {
  return {rank_ + other.rank_, divisor_ + other.divisor_, degree_ + other.degree_};
}

MukaiVector MukaiVector::operator-(const MukaiVector& other) const {
  return {rank_ - other.rank_, divisor_ - other.divisor_, degree_ - other.degree_};
}

Rational mukaiPair(const MukaiVector& v, const MukaiVector& w) {
  return intersect(v.divisor(), w.divisor()) - Rational(Integer(v.rank()) * w.degree()) -
         Rational(Integer(w.rank()) * v.degree());
}

Rational eulerChar(const MukaiVector& v, const MukaiVector& w) { return -mukaiPair(v, w); }

MukaiVector twistByL(const MukaiVector& v) {
  const auto& lat = v.lattice();
  const DivisorClass L = DivisorClass::L(lat);
  // D.L = -e1 is always integral
  const std::int64_t dDotL = toInt64(intersect(v.divisor(), L));
  return {v.rank(), v.divisor() + L * v.rank(), v.degree() + dDotL - v.rank()};
}

namespace {

std::array<Integer, 4> coords(const MukaiVector& v) {
  return {Integer(v.rank()), Integer(v.divisor().k1()), Integer(v.divisor().e1()),
          Integer(v.degree())};
}

}  // namespace

bool proportional(const MukaiVector& a, const MukaiVector& b) {
  const auto x = coords(a);
  const auto y = coords(b);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (x[i] * y[j] != x[j] * y[i]) return false;
    }
  }
  return true;
}

bool linearlyDependent(const MukaiVector& a, const MukaiVector& b, const MukaiVector& c) {
  const auto x = coords(a);
  const auto y = coords(b);
  const auto z = coords(c);
  // every 3x3 minor of the 3x4 coordinate matrix vanishes
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<std::size_t, 3> col{};
    for (std::size_t i = 0, n = 0; i < 4; ++i) {
      if (i != skip) col[n++] = i;
    }
    const Integer det = x[col[0]] * (y[col[1]] * z[col[2]] - y[col[2]] * z[col[1]]) -
                        x[col[1]] * (y[col[0]] * z[col[2]] - y[col[2]] * z[col[0]]) +
                        x[col[2]] * (y[col[0]] * z[col[1]] - y[col[1]] * z[col[0]]);
    if (det != 0) return false;
  }
  return true;
}

ProblemInstance::ProblemInstance(const NSLattice& lattice, std::int64_t r, std::int64_t d,
                                 std::int64_t a)
    : lattice_(lattice), r_(r), d_(d), a_(a) {
  if (r <= 0) throw std::invalid_argument("rank must be positive");
  const Integer sq = Integer(d) * d * lattice.hSquared() - 2 * Integer(r) * a;
  if (sq != -2) {
    throw std::invalid_argument("d^2*H^2 - 2*r*a != -2 (got " + sq.str() + ")");
  }
  // forced by sphericality
  if (std::gcd(r, d) != 1) throw std::logic_error("spherical class with gcd(r, d) != 1");
}

MukaiVector ProblemInstance::u() const {
  return {r_, DivisorClass::H(lattice_) * d_, a_};
}

MukaiVector ProblemInstance::v() const { return twistByL(u()); }

MukaiVector ProblemInstance::t(std::int64_t m) const {
  return {0, DivisorClass::L(lattice_), m};
}

std::vector<std::pair<std::int64_t, std::int64_t>> pellSolutions(std::int64_t r,
                                                                  std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const Integer value = Integer(x) * x - Integer(r) * x * y + Integer(y) * y;
      if (value == 1) out.emplace_back(x, y);
    }
  }
  return out;
}

std::int64_t pellMinimalityBound(std::int64_t r) { return std::max<std::int64_t>(50, 5 * r); }

bool isMinimalPellPair(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::int64_t best = -1;
  bool unitFound = false;
  bool otherAtBest = false;
  for (const auto& [x, y] : pellSolutions(r, pellMinimalityBound(r))) {
    if (x < 0 || y < 0) continue;
    const std::int64_t norm = x + y;
    const bool unit = (x == 1 && y == 0) || (x == 0 && y == 1);
    if (best < 0 || norm < best) {
      best = norm;
      unitFound = unit;
      otherAtBest = !unit;
    } else if (norm == best) {
      unitFound = unitFound || unit;
      otherAtBest = otherAtBest || !unit;
    }
  }
  return unitFound && !otherAtBest;
}

}  // namespace nodalk3
