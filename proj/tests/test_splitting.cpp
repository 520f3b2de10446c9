#include "nodalk3/splitting.hpp"

#include <doctest.h>

#include <functional>
#include <stdexcept>

using namespace nodalk3;

namespace {

/// Calls f on every nonincreasing tuple of length r with entries in [-bound, bound].
void forEachSplitting(std::size_t r, std::int64_t bound,
                      const std::function<void(const SplittingType&)>& f) {
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t)> rec = [&](std::int64_t ceiling) {
    if (parts.size() == r) {
      f(SplittingType(parts));
      return;
    }
    for (std::int64_t a = ceiling; a >= -bound; --a) {
      parts.push_back(a);
      rec(a);
      parts.pop_back();
    }
  };
  rec(bound);
}

}  // namespace

TEST_SUITE("splitting-descent") {

TEST_CASE("parts are kept in decreasing order") {
  const SplittingType s({-2, 2, 0});
  CHECK(s.parts() == std::vector<std::int64_t>{2, 0, -2});
  CHECK(s.rank() == 3);
  CHECK(s.zeroSum());
  CHECK(s.toString() == "(2,0,-2)");
  CHECK_FALSE(SplittingType({1, 0}).zeroSum());
  CHECK_THROWS_AS(SplittingType({}), std::invalid_argument);
}

TEST_CASE("hom dimensions on L") {
  CHECK(homDimOnL(SplittingType({0, 0}), -2) == 0);
  CHECK(homDimOnL(SplittingType({2, -2}), -2) == 3);
  CHECK(homDimOnL(SplittingType({1, -1}), -2) == 1);
  // End(O(2) + O(-2)) = 1 + 1 + h^0(O(4))
  CHECK(homDimOnL(SplittingType({2, -2}), 0) == 7);
}

TEST_CASE("descent") {
  CHECK(descends(SplittingType({0, 0, 0})));
  CHECK_FALSE(descends(SplittingType({2, -2})));
  CHECK_FALSE(descends(SplittingType({1, -1})));
  try {
    descends(SplittingType({1, 0}));
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "criterion requires c1.L = 0");
  }
  CHECK(homCriterionAgrees(SplittingType({0, 0})));
  CHECK(homCriterionAgrees(SplittingType({2, -2})));
}

TEST_CASE("hom criterion agrees with descent on every small zero-sum splitting") {
  long cases = 0;
  for (std::size_t r = 1; r <= 5; ++r) {
    forEachSplitting(r, 4, [&](const SplittingType& s) {
      if (!s.zeroSum()) return;
      ++cases;
      CHECK(homCriterionAgrees(s));
      CHECK((homDimOnL(s, -2) == 0) == descends(s));
    });
  }
  CHECK(cases > 100);
}

TEST_CASE("endomorphisms of a splitting") {
  // h^0(End) >= r^2, with equality iff the parts differ by at most one
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto rr = static_cast<std::int64_t>(r * r);
    forEachSplitting(r, 3, [&](const SplittingType& s) {
      const auto& p = s.parts();
      const bool balanced = p.front() - p.back() <= 1;
      CHECK(homDimOnL(s, 0) >= static_cast<std::int64_t>(r));
      CHECK(homDimOnL(s, 0) >= rr);
      CHECK((homDimOnL(s, 0) == rr) == balanced);
    });
  }
  CHECK(homDimOnL(SplittingType({1, 0}), 0) == 4);
  CHECK(homDimOnL(SplittingType({0, 0}), 0) == 4);
}

TEST_CASE("nontrivial zero-sum splittings have maps into the -2 twist") {
  forEachSplitting(3, 3, [&](const SplittingType& s) {
    if (s.zeroSum() && !descends(s)) CHECK(homDimOnL(s, -2) > 0);
  });
}

}  // TEST_SUITE
