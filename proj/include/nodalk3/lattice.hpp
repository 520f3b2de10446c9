#pragma once

// Neron-Severi and Mukai lattice arithmetic for the resolution of a general
// nodal K3 surface. The NS lattice is ZH + ZL (H^2 = h, H.L = 0, L^2 = -2),
// possibly enlarged by the index-2 overlattice of classes (k1 H + e1 L)/2 with
// k1, e1 odd when the class group of the nodal surface is nontrivial.

#include "nodalk3/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nodalk3 {

class NSLattice {
 public:
  /// Throws std::invalid_argument unless hSquared is positive and even, and
  /// (when classGroupNontrivial) hSquared = 2 mod 8.
  NSLattice(std::int64_t hSquared, bool classGroupNontrivial);

  std::int64_t hSquared() const { return h_squared_; }
  bool classGroupNontrivial() const { return class_group_nontrivial_; }

  /// Whether (k1 H + e1 L)/2 is a class of this lattice.
  bool contains(std::int64_t k1, std::int64_t e1) const;

  friend bool operator==(const NSLattice&, const NSLattice&) = default;

 private:
  std::int64_t h_squared_;
  bool class_group_nontrivial_;
};

/// The class (k1 H + e1 L)/2, stored with doubled coordinates.
class DivisorClass {
 public:
  /// Throws std::invalid_argument when the class is not in the lattice.
  DivisorClass(const NSLattice& lattice, std::int64_t k1, std::int64_t e1);

  static DivisorClass zero(const NSLattice& lattice) { return {lattice, 0, 0}; }
  static DivisorClass H(const NSLattice& lattice) { return {lattice, 2, 0}; }
  static DivisorClass L(const NSLattice& lattice) { return {lattice, 0, 2}; }

  /// Checked construction from (hCoeff) H + (lCoeff) L; nullopt if not a lattice class.
  static std::optional<DivisorClass> fromCoefficients(const NSLattice& lattice,
                                                      const Rational& hCoeff,
                                                      const Rational& lCoeff);

  const NSLattice& lattice() const { return lattice_; }
  std::int64_t k1() const { return k1_; }
  std::int64_t e1() const { return e1_; }
  Rational hCoefficient() const { return Rational(k1_, 2); }
  Rational lCoefficient() const { return Rational(e1_, 2); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const { return {lattice_, -k1_, -e1_}; }
  DivisorClass operator*(std::int64_t n) const { return {lattice_, n * k1_, n * e1_}; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  NSLattice lattice_;
  std::int64_t k1_;
  std::int64_t e1_;
};

/// (k1 k1' h - 2 e1 e1') / 4. Throws std::invalid_argument on mismatched lattices.
Rational intersect(const DivisorClass& a, const DivisorClass& b);

/// Mukai vector (rank, c1, degree) in H^0 + NS + H^4.
class MukaiVector {
 public:
  MukaiVector(std::int64_t rank, DivisorClass divisor, std::int64_t degree);

  /// Checked construction from rational data; nullopt if any entry is not integral
  /// or the divisor is not a lattice class.
  static std::optional<MukaiVector> fromRational(const NSLattice& lattice, const Rational& rank,
                                                 const Rational& hCoeff, const Rational& lCoeff,
                                                 const Rational& degree);

  std::int64_t rank() const { return rank_; }
  const DivisorClass& divisor() const { return divisor_; }
  std::int64_t degree() const { return degree_; }
  const NSLattice& lattice() const { return divisor_.lattice(); }

  Rational square() const;
  bool isSpherical() const { return square() == -2; }

  MukaiVector operator+(const MukaiVector& other) const;
  MukaiVector operator-(const MukaiVector& other) const;
  MukaiVector operator-() const { return {-rank_, -divisor_, -degree_}; }
  MukaiVector operator*(std::int64_t n) const { return {n * rank_, divisor_ * n, n * degree_}; }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

 private:
  std::int64_t rank_;
  DivisorClass divisor_;
  std::int64_t degree_;
};

/// <(r,D,a),(r',D',a')> = D.D' - r a' - r' a.
Rational mukaiPair(const MukaiVector& v, const MukaiVector& w);

/// chi(v, w) = -<v, w>.
Rational eulerChar(const MukaiVector& v, const MukaiVector& w);

/// Tensoring by O(L): (r, D, a) -> (r, D + rL, a + D.L - r).
MukaiVector twistByL(const MukaiVector& v);

/// Whether the three vectors are linearly dependent over Q.
bool linearlyDependent(const MukaiVector& a, const MukaiVector& b, const MukaiVector& c);

/// Whether the two vectors are proportional over Q.
bool proportional(const MukaiVector& a, const MukaiVector& b);

/// A spherical class u = (r, dH, a) of positive rank on a fixed lattice.
class ProblemInstance {
 public:
  /// Throws std::invalid_argument unless r > 0 and d^2 h - 2 r a = -2.
  ProblemInstance(const NSLattice& lattice, std::int64_t r, std::int64_t d, std::int64_t a);

  const NSLattice& lattice() const { return lattice_; }
  std::int64_t r() const { return r_; }
  std::int64_t d() const { return d_; }
  std::int64_t a() const { return a_; }

  /// u = (r, dH, a)
  MukaiVector u() const;
  /// v = u(L) = (r, dH + rL, a - r)
  MukaiVector v() const;
  /// t_m = (0, L, m), the class of O_L(m - 1)
  MukaiVector t(std::int64_t m) const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  NSLattice lattice_;
  std::int64_t r_;
  std::int64_t d_;
  std::int64_t a_;
};

/// All (x, y) with |x|, |y| <= bound and x^2 - r x y + y^2 = 1, sorted.
/// These are the coordinates of the spherical classes x u + y t_{-1}.
std::vector<std::pair<std::int64_t, std::int64_t>> pellSolutions(std::int64_t r,
                                                                  std::int64_t bound);

/// Brute-force window used by isMinimalPellPair.
std::int64_t pellMinimalityBound(std::int64_t r);

/// Whether (1,0) and (0,1) are the nonnegative solutions of least x + y.
bool isMinimalPellPair(std::int64_t r);

}  // namespace nodalk3
