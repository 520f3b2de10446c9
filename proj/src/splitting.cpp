#include "nodalk3/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nodalk3 {

SplittingType::SplittingType(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("splitting type needs at least one part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t SplittingType::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string SplittingType::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::int64_t homDimOnL(const SplittingType& source, std::int64_t twist) {
  std::int64_t dim = 0;
  for (std::int64_t aj : source.parts()) {
    for (std::int64_t ai : source.parts()) dim += std::max<std::int64_t>(0, ai + twist - aj + 1);
  }
  return dim;
}

bool descends(const SplittingType& s) {
  if (!s.zeroSum()) throw std::invalid_argument("criterion requires c1.L = 0");
  return std::all_of(s.parts().begin(), s.parts().end(), [](std::int64_t a) { return a == 0; });
}

bool homCriterionAgrees(const SplittingType& s) { return descends(s) == (homDimOnL(s, -2) == 0); }

}  // namespace nodalk3
