#pragma once

#include "nodalk3/lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using nodalk3::Rational;

struct GridPoint {
  std::int64_t h;
  bool cl;
  std::int64_t r, d, a;

  nodalk3::ProblemInstance instance() const {
    return nodalk3::ProblemInstance(nodalk3::NSLattice(h, cl), r, d, a);
  }
};

/// h in {2,...,50}, r in 1..6, |d| <= 5, a from d^2 h - 2 r a = -2; Cl != Pic only for h = 2 mod 8.
inline std::vector<GridPoint> theoremGrid() {
  std::vector<GridPoint> grid;
  for (std::int64_t h = 2; h <= 50; h += 2) {
    for (int cl = 0; cl < 2; ++cl) {
      if (cl && h % 8 != 2) continue;
      for (std::int64_t r = 1; r <= 6; ++r) {
        for (std::int64_t d = -5; d <= 5; ++d) {
          const std::int64_t num = d * d * h + 2;
          if (num % (2 * r) != 0) continue;
          grid.push_back({h, cl == 1, r, d, num / (2 * r)});
        }
      }
    }
  }
  return grid;
}

inline std::vector<GridPoint> randomInstances(std::size_t n, std::uint64_t seed) {
  const auto grid = theoremGrid();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(grid[pick(rng)]);
  return out;
}

/// A random lattice vector (rank, (k1 H + e1 L)/2, degree).
inline nodalk3::MukaiVector randomVector(const nodalk3::NSLattice& lat, std::mt19937_64& rng,
                                         std::int64_t range = 6) {
  std::uniform_int_distribution<std::int64_t> u(-range, range);
  while (true) {
    const std::int64_t k1 = u(rng), e1 = u(rng);
    if (lat.contains(k1, e1)) return {u(rng), nodalk3::DivisorClass(lat, k1, e1), u(rng)};
  }
}

/// A random spherical class of rank 0..maxRank.
inline nodalk3::MukaiVector randomSpherical(const nodalk3::NSLattice& lat, std::mt19937_64& rng,
                                            std::int64_t maxRank = 6) {
  std::uniform_int_distribution<std::int64_t> rank(0, maxRank), coord(-8, 8), deg(-10, 10);
  while (true) {
    const std::int64_t r = rank(rng), k1 = coord(rng), e1 = coord(rng);
    if (!lat.contains(k1, e1)) continue;
    const Rational dd = Rational(k1 * k1 * lat.hSquared() - 2 * e1 * e1, 4);
    if (r == 0) {
      if (dd == -2) return {0, nodalk3::DivisorClass(lat, k1, e1), deg(rng)};
      continue;
    }
    const Rational a = (dd + 2) / (2 * r);
    if (nodalk3::isInteger(a)) {
      return {r, nodalk3::DivisorClass(lat, k1, e1), nodalk3::toInt64(a)};
    }
  }
}

/// Mukai pairing from the Gram matrix diag(h, -2) of (H, L), written out longhand.
inline Rational pairingOracle(std::int64_t h, std::int64_t r1, std::int64_t k1, std::int64_t e1,
                              std::int64_t a1, std::int64_t r2, std::int64_t k2, std::int64_t e2,
                              std::int64_t a2) {
  const Rational x1(k1, 2), y1(e1, 2), x2(k2, 2), y2(e2, 2);
  const Rational dd = x1 * x2 * h + y1 * y2 * (-2);
  return dd - Rational(r1 * a2) - Rational(r2 * a1);
}

inline Rational pairingOracle(const nodalk3::MukaiVector& v, const nodalk3::MukaiVector& w) {
  return pairingOracle(v.lattice().hSquared(), v.rank(), v.divisor().k1(), v.divisor().e1(),
                       v.degree(), w.rank(), w.divisor().k1(), w.divisor().e1(), w.degree());
}

}  // namespace fixtures
