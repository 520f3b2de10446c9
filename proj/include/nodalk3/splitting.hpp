#pragma once

// Splitting types of bundles restricted to the exceptional curve L = P^1:
// E|_L = O(a_1) + ... + O(a_r) with a_1 >= ... >= a_r.

#include <cstdint>
#include <string>
#include <vector>

namespace nodalk3 {

class SplittingType {
 public:
  /// Sorts the parts in decreasing order. Throws std::invalid_argument when empty.
  explicit SplittingType(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t rank() const { return parts_.size(); }
  std::int64_t sum() const;
  /// c1 . L = 0, as for any bundle with c1 proportional to H.
  bool zeroSum() const { return sum() == 0; }

  std::string toString() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// dim Hom_L(E|_L, E|_L(twist)) = sum over (j, i) of max(0, a_i + twist - a_j + 1).
std::int64_t homDimOnL(const SplittingType& source, std::int64_t twist);

/// E descends to the nodal surface iff E|_L is trivial.
/// Throws std::invalid_argument("criterion requires c1.L = 0") unless zero-sum.
bool descends(const SplittingType& s);

/// descends(s) == (homDimOnL(s, -2) == 0). Same precondition as descends.
bool homCriterionAgrees(const SplittingType& s);

}  // namespace nodalk3
