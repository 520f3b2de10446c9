// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "nodalk3/destabilizer.hpp"
#include "nodalk3/report.hpp"
#include "nodalk3/splitting.hpp"
#include "support/fixtures.hpp"
#include "support/random_poly.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

using namespace nodalk3;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " ("
            << ms << " ms)" << std::endl;
}

/// One search per grid instance, shared by criteria 2, 3 and 5.
struct GridRun {
  fixtures::GridPoint point;
  SearchReport search;
  std::optional<Classification> classification;
  std::string breach;
};

const std::vector<GridRun>& gridRuns() {
  static const std::vector<GridRun> runs = [] {
    std::vector<GridRun> out;
    for (const auto& g : fixtures::theoremGrid()) {
      const ProblemInstance inst = g.instance();
      GridRun run{g, searchAll(inst, SearchBounds::defaults(inst)), std::nullopt, ""};
      try {
        run.classification = classify(inst, run.search);
      } catch (const InvariantBreach& e) {
        run.breach = e.what();
      }
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

std::string label(const fixtures::GridPoint& g) {
  std::ostringstream s;
  s << "(H^2=" << g.h << (g.cl ? ", Cl!=Pic" : "") << ", r=" << g.r << ", d=" << g.d
    << ", a=" << g.a << ")";
  return s.str();
}

Outcome pairingConvention() {
  for (const auto& g : fixtures::randomInstances(100, 1001)) {
    const ProblemInstance inst = g.instance();
    const Rational ut = mukaiPair(inst.u(), inst.t(-1));
    if (ut != g.r || ut != fixtures::pairingOracle(inst.u(), inst.t(-1))) {
      return {false, "u.t_{-1} != r at " + label(g)};
    }
    if (inst.u().square() != g.d * g.d * g.h - 2 * g.r * g.a) {
      return {false, "u^2 != d^2 H^2 - 2ra at " + label(g)};
    }
  }
  return {true, "100 instances"};
}

Outcome theoremReproduction() {
  std::size_t empty = 0;
  for (const auto& run : gridRuns()) {
    if (!run.classification) return {false, "invariant breach at " + label(run.point) + ": " + run.breach};
    const bool expected = run.point.r == 2 && run.point.cl;
    const bool got = run.classification->outcome == nodalk3::Outcome::Empty;
    if (expected != got) return {false, "wrong outcome at " + label(run.point)};
    empty += got;
  }
  return {true, std::to_string(gridRuns().size()) + " instances, " + std::to_string(empty) + " empty"};
}

Outcome oracleEquivalence() {
  for (const auto& run : gridRuns()) {
    if (!run.classification) return {false, "invariant breach at " + label(run.point)};
    const bool empty = run.classification->outcome == nodalk3::Outcome::Empty;
    if (empty == run.search.survivors.empty()) return {false, "disagreement at " + label(run.point)};
  }
  const ProblemInstance inst(NSLattice(18, true), 2, 1, 5);
  std::set<std::tuple<std::int64_t, std::int64_t, Rational>> got;
  for (const auto& e : searchAll(inst, SearchBounds::defaults(inst)).survivors) {
    got.insert({e.candidate.k1, e.candidate.e1, e.candidate.m});
  }
  const std::set<std::tuple<std::int64_t, std::int64_t, Rational>> want{{1, 1, 3}, {1, 3, 1}};
  if (got != want) return {false, "survivors of (18,2,1,5,Cl!=Pic) differ from {(1,1,3),(1,3,1)}"};
  return {true, "grid agrees; (18,2,1,5,Cl!=Pic) -> {(1,1,3),(1,3,1)}"};
}

Outcome paperConstants() {
  if (vvPrime(4, 6, 3) != 2) return {false, "vvPrime(4,6,3) != 2"};
  for (std::int64_t r = 2; r <= 8; ++r) {
    if (vvPrime(2, 2 * r, r) != -2) return {false, "vvPrime(2,2r,r) != -2 at r=" + std::to_string(r)};
  }
  std::set<std::int64_t> ranks;
  for (std::int64_t r = 1; r <= 100; ++r) {
    for (std::int64_t k1 = -200; k1 <= 200; ++k1) {
      if (k1 * (k1 - r) == 3 && (k1 * r) % 2 == 0) ranks.insert(r);
    }
  }
  if (ranks != std::set<std::int64_t>{2}) return {false, "k1(k1-r)=3 solvable outside r=2"};

  const EpsPoly eps = EpsPoly::eps();
  for (const auto& g : fixtures::randomInstances(20, 1004)) {
    const ProblemInstance inst = g.instance();
    const PolarizationPath path(inst);
    const EpsPoly q = EpsPoly(g.h) - EpsPoly(2) * eps * eps;
    for (std::int64_t m = -5; m <= 5; ++m) {
      const NumericalWall lib = wallOf(inst.u(), inst.t(m), path);
      const NumericalWall shown{eps * EpsPoly(g.r) * q, EpsPoly(-g.r * m) * q,
                                EpsPoly(m * g.d * g.h) - EpsPoly(2 * g.a) * eps};
      if (!lib.sameLocus(shown) || lib.alpha.sign() != shown.alpha.sign()) {
        return {false, "W_m mismatch at m=" + std::to_string(m) + " " + label(g)};
      }
    }
  }
  return {true, "vv' constants, k1(k1-r)=3 only at r=2, W_m x 220"};
}

Outcome stabilitySSweep() {
  for (const auto& run : gridRuns()) {
    if (!run.search.uSurvivors.empty()) return {false, "subobject of u survives at " + label(run.point)};
  }
  return {true, "no ForU survivor on " + std::to_string(gridRuns().size()) + " instances"};
}

Outcome infinitesimalSoundness() {
  std::mt19937_64 rng(2024);
  const Rational e(1, 1000000);
  const Rational ep(1, 1000000000000000000LL);
  int mismatches = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    const EpsPoly p = fixtures::randomPoly(rng);
    const Rational value = p.instantiate(e, ep);
    const int s = value > 0 ? 1 : (value < 0 ? -1 : 0);
    if (s != p.sign()) {
      if (mismatches++ == 0) first = p.toString();
    }
  }
  if (mismatches == 0) return {true, "500 polynomials"};
  return {false, std::to_string(mismatches) + "/500 sign mismatches at (1e-6, 1e-18), e.g. " + first};
}

Outcome mod8Gate() {
  for (std::int64_t h : {4, 6, 8, 12, 16}) {
    try {
      NSLattice(h, true);
      return {false, "accepted H^2=" + std::to_string(h)};
    } catch (const std::invalid_argument&) {
    }
  }
  for (std::int64_t h : {2, 10, 18, 26}) NSLattice(h, true);
  int tested = 0;
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t d = -5; d <= 5; ++d) {
      const std::int64_t num = 4 * d * d + 2;
      if (num % (2 * r) != 0) continue;
      const ProblemInstance inst(NSLattice(4, false), r, d, num / (2 * r));
      if (classify(inst).outcome != nodalk3::Outcome::ReducedPointLocallyFree) {
        return {false, "H^2=4 instance not a reduced point"};
      }
      ++tested;
    }
  }
  return {true, "gate exact; " + std::to_string(tested) + " spherical classes on H^2=4"};
}

Outcome contractionFixture() {
  // Gram matrix of (h, L): h^2 = 4, h.L = 1, L^2 = -2
  const std::int64_t gram[2][2] = {{4, 1}, {1, -2}};
  const std::int64_t x[2] = {2, 1};
  std::int64_t sq = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sq += x[i] * gram[i][j] * x[j];
  }
  if (sq != 18 || sq % 8 != 2) return {false, "(2h+L)^2 = " + std::to_string(sq)};
  NSLattice(sq, true);
  return {true, "(2h+L)^2 = 18 = 2 mod 8"};
}

Outcome descentCalculus() {
  long cases = 0;
  std::vector<std::int64_t> parts;
  bool ok = true;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t r, std::int64_t ceiling) {
    if (parts.size() == r) {
      const SplittingType s(parts);
      if (!s.zeroSum()) return;
      ++cases;
      ok = ok && homCriterionAgrees(s);
      return;
    }
    for (std::int64_t a = ceiling; a >= -4; --a) {
      parts.push_back(a);
      rec(r, a);
      parts.pop_back();
    }
  };
  for (std::size_t r = 1; r <= 5; ++r) rec(r, 4);
  if (!ok) return {false, "criterion disagrees"};
  if (homDimOnL(SplittingType({2, -2}), -2) != 3) return {false, "homDimOnL((2,-2),-2) != 3"};
  return {true, std::to_string(cases) + " zero-sum splittings"};
}

Outcome chiIdentities() {
  for (const auto& g : fixtures::randomInstances(100, 1010)) {
    const ProblemInstance inst = g.instance();
    if (eulerChar(inst.u(), inst.u()) != 2) return {false, "chi(u,u) != 2 at " + label(g)};
    if (eulerChar(inst.u(), twistByL(inst.u())) != 2 - g.r * g.r) {
      return {false, "chi(u,u(L)) != 2-r^2 at " + label(g)};
    }
  }
  return {true, "100 instances"};
}

bool keysSorted(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first && !(prev < k)) return false;
      prev = k;
      first = false;
      if (!keysSorted(v)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!keysSorted(v)) return false;
    }
  }
  return true;
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "nodalk3_acceptance";
  std::filesystem::create_directories(dir);
  RunConfig walls;
  walls.command = Command::Walls;
  walls.h2 = 4;
  walls.r = 3;
  walls.d = 1;
  walls.a = 1;
  walls.eps = "1/100";
  walls.epsp = "1/1000000";
  std::string bytes[2];
  for (int i = 0; i < 2; ++i) {
    walls.out = (dir / ("run" + std::to_string(i) + ".svg")).string();
    std::ostringstream out, err;
    if (runCommand(walls, out, err) != kExitOk) return {false, "walls failed: " + err.str()};
    std::ifstream f(*walls.out, std::ios::binary);
    bytes[i].assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  std::filesystem::remove_all(dir);
  if (bytes[0].empty() || bytes[0] != bytes[1]) return {false, "SVG differs between runs"};

  const std::vector<std::string> schema{"gcd_check", "instance",        "mod8_note", "outcome",
                                        "reason",    "spherical_check", "survivors"};
  for (bool cl : {true, false}) {
    RunConfig c;
    c.command = Command::Classify;
    c.h2 = 18;
    c.clNePic = cl;
    c.r = 2;
    c.d = 1;
    c.a = 5;
    std::ostringstream out, err;
    if (runCommand(c, out, err) != kExitOk) return {false, "classify failed"};
    const auto doc = nlohmann::ordered_json::parse(out.str());
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    if (keys != schema) return {false, "classify keys differ from the documented schema"};
    if (!keysSorted(doc)) return {false, "classify JSON not key-sorted"};
  }
  return {true, "SVG byte-identical; classify JSON sorted with documented keys"};
}

}  // namespace

int main() {
  report(1, "pairing convention", pairingConvention);
  report(2, "classification over the grid", theoremReproduction);
  report(3, "search agrees with classification", oracleEquivalence);
  report(4, "paper constants", paperConstants);
  report(5, "no destabilizing subobject of u", stabilitySSweep);
  report(6, "infinitesimal sign vs instantiation", infinitesimalSoundness);
  report(7, "mod-8 gate and H^2=4 classes", mod8Gate);
  report(8, "contraction fixture", contractionFixture);
  report(9, "descent calculus", descentCalculus);
  report(10, "chi identities", chiIdentities);
  report(11, "determinism", determinism);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
