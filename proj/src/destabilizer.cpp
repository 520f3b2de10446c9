#include "nodalk3/destabilizer.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace nodalk3 {

const char* toString(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::ForU: return "u";
    case CandidateKind::ForT: return "t";
    case CandidateKind::ForV: return "v";
  }
  return "?";
}

const char* toString(Condition condition) {
  switch (condition) {
    case Condition::Parity: return "parity";
    case Condition::Sphericality: return "sphericality";
    case Condition::EffectivityOfCandidate: return "effectivity-of-candidate";
    case Condition::EffectivityOfComplement: return "effectivity-of-complement";
    case Condition::PairingSign: return "pairing-sign";
    case Condition::WallPosition: return "wall-position";
    case Condition::LimitPhaseContradiction: return "limit-phase-contradiction";
  }
  return "?";
}

const char* toString(Outcome outcome) {
  switch (outcome) {
    case Outcome::Empty: return "empty";
    case Outcome::ReducedPointLocallyFree: return "reduced_point_locally_free";
  }
  return "?";
}

std::string Failure::describe() const { return std::string(toString(condition)) + ": " + detail; }

bool Verdict::failed(Condition c) const {
  return std::any_of(failures.begin(), failures.end(),
                     [c](const Failure& f) { return f.condition == c; });
}

Rational mFromKE(std::int64_t k1, std::int64_t e1, const ProblemInstance& inst) {
  if (k1 == 0) throw std::invalid_argument("mFromKE needs k1 != 0");
  const Rational k(k1, 2);
  const Rational e(e1, 2);
  return k * inst.a() - (k * k + e * e - 1) / (k * inst.r());
}

Rational vvPrime(std::int64_t k1, std::int64_t e1, std::int64_t r) {
  if (k1 == 0) throw std::invalid_argument("vvPrime needs k1 != 0");
  const Rational k(k1, 2);
  const Rational e(e1, 2);
  return -k - 2 * e * r + (e * e - 1) / k + k * r * r;
}

Candidate Candidate::forU(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1) {
  return {k1, e1, mFromKE(k1, e1, inst), CandidateKind::ForU};
}

Candidate Candidate::forURankZero(std::int64_t e1, std::int64_t m) {
  return {0, e1, Rational(m), CandidateKind::ForU};
}

Candidate Candidate::forV(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1) {
  return {k1, e1, mFromKE(k1, e1, inst), CandidateKind::ForV};
}

Candidate Candidate::forT(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1) {
  return {k1, e1, Rational(k1 * inst.a() - e1, 2), CandidateKind::ForT};
}

std::optional<MukaiVector> candidateVector(const ProblemInstance& inst, const Candidate& cand) {
  return MukaiVector::fromRational(inst.lattice(), Rational(cand.k1 * inst.r(), 2),
                                   Rational(cand.k1 * inst.d(), 2), Rational(cand.e1, 2), cand.m);
}

WallContext::WallContext(const ProblemInstance& inst)
    : WallContext(inst, VerticalLine::standard(PolarizationPath(inst))) {}

WallContext::WallContext(const ProblemInstance& inst, VerticalLine line)
    : path_(inst),
      line_(std::move(line)),
      w_minus_one_(wallOf(inst.u(), inst.t(-1), path_)) {
  auto h = wallHeightSq(w_minus_one_, line_.abscissa);
  if (!h) throw std::logic_error("W_{-1} does not meet the line b");
  height_minus_one_ = *h;
  const EpsRational radius = line_.abscissa * line_.abscissa + height_minus_one_;
  s_num_ = line_.abscissa.numerator();
  s_den_ = line_.abscissa.denominator();
  q_ = path_.hEpsSquared();
  point_alpha_ = radius.numerator() * s_den_;
  point_beta_ = s_num_ * radius.denominator();
  point_gamma_ = radius.denominator() * s_den_;
}

int WallContext::compareWithMinusOne(const NumericalWall& wall) const {
  if (wall.isVertical()) throw std::domain_error("vertical wall has no height function");
  // the wall polynomial at a point of b equals alpha (t^2 - t^2(wall))
  const EpsPoly f = wall.alpha * point_alpha_ + wall.beta * point_beta_ + wall.gamma * point_gamma_;
  return -f.sign() * wall.alpha.sign();
}

EpsPoly WallContext::scaledDefect(const MukaiVector& w) const {
  return path_.degree(w.divisor()) * s_den_ - EpsPoly(w.rank()) * q_ * s_num_;
}

namespace {

std::string str(std::int64_t x) { return std::to_string(x); }

std::string signWord(int s) { return s > 0 ? "positive" : (s < 0 ? "negative" : "zero"); }

/// Integrality screen shared by every kind; returns the vector when it is a lattice class.
std::optional<MukaiVector> screen(const ProblemInstance& inst, const Candidate& cand,
                                  Verdict& verdict) {
  if ((cand.k1 - cand.e1) % 2 != 0) {
    verdict.failures.push_back(
        {Condition::Parity, "k1=" + str(cand.k1) + ", e1=" + str(cand.e1) + " differ in parity"});
    return std::nullopt;
  }
  if (!isInteger(cand.m)) {
    verdict.failures.push_back({Condition::Sphericality, "m=" + toString(cand.m) + " not integral"});
    return std::nullopt;
  }
  auto vec = candidateVector(inst, cand);
  if (!vec) {
    verdict.failures.push_back({Condition::Parity, "not an integral lattice class"});
    return std::nullopt;
  }
  if (!vec->isSpherical()) {
    std::string detail = "square " + toString(vec->square()) + " != -2";
    if (cand.kind == CandidateKind::ForT && cand.e1 == 1) {
      detail += " (k1(k1-r)=" + str(cand.k1 * (cand.k1 - inst.r())) + " != 3)";
    }
    verdict.failures.push_back({Condition::Sphericality, detail});
    return std::nullopt;
  }
  return vec;
}

void checkEffective(const WallContext& ctx, const MukaiVector& w, Condition condition,
                    Verdict& verdict) {
  const EpsPoly defect = ctx.scaledDefect(w);
  if (defect.sign() < 0) {
    verdict.failures.push_back({condition, "defect " + defect.toString() + " < 0"});
  }
}

/// Height of W(base, other) on the line relative to W_{-1}; records a failure
/// unless the wall is at least as high (or strictly higher when strict).
void checkWallAbove(const WallContext& ctx, const MukaiVector& base, const MukaiVector& other,
                    bool strict, Verdict& verdict) {
  const NumericalWall wall = wallOf(base, other, ctx.path());
  if (wall.isVertical()) {
    verdict.failures.push_back({Condition::WallPosition, "vertical wall"});
    return;
  }
  const int order = ctx.compareWithMinusOne(wall);
  if (order > 0) return;
  if (order == 0) {
    if (strict) verdict.failures.push_back({Condition::WallPosition, "W=W_{-1}"});
    return;
  }
  if (!wallHeightSq(wall, ctx.line().abscissa)) {
    verdict.failures.push_back({Condition::WallPosition, "wall misses b"});
  } else {
    verdict.failures.push_back({Condition::WallPosition, "below W_{-1}"});
  }
}

void requireKind(const Candidate& cand, CandidateKind kind) {
  if (cand.kind != kind) {
    throw std::invalid_argument(std::string("candidate of kind ") + toString(cand.kind) +
                                " passed to the " + toString(kind) + " check");
  }
}

}  // namespace

Verdict checkCandidateS(const WallContext& ctx, const Candidate& cand) {
  requireKind(cand, CandidateKind::ForU);
  const auto& inst = ctx.instance();
  Verdict verdict;
  const auto uPrime = screen(inst, cand, verdict);
  if (!uPrime) return verdict;
  const MukaiVector u = inst.u();

  checkEffective(ctx, *uPrime, Condition::EffectivityOfCandidate, verdict);
  checkEffective(ctx, u - *uPrime, Condition::EffectivityOfComplement, verdict);

  const Rational pairing = mukaiPair(u, *uPrime);
  if (pairing >= 0) {
    verdict.failures.push_back({Condition::PairingSign, "uu'=" + toString(pairing)});
  }

  if (proportional(u, *uPrime)) {
    verdict.failures.push_back({Condition::WallPosition, "W=W_{-1}: u' is a multiple of u"});
  } else {
    checkWallAbove(ctx, u, *uPrime, /*strict=*/true, verdict);
  }
  return verdict;
}

Verdict checkCandidateT(const WallContext& ctx, const Candidate& cand) {
  requireKind(cand, CandidateKind::ForT);
  const auto& inst = ctx.instance();
  Verdict verdict;
  const auto g = screen(inst, cand, verdict);
  if (!g) return verdict;

  checkEffective(ctx, *g, Condition::EffectivityOfCandidate, verdict);
  checkEffective(ctx, inst.t(-1) - *g, Condition::EffectivityOfComplement, verdict);

  if (*g == inst.u()) {
    verdict.failures.push_back({Condition::WallPosition, "g=u is the other stable factor on W_{-1}"});
  } else if (g->rank() == 0) {
    verdict.failures.push_back({Condition::WallPosition, "rank-zero factor"});
  }
  return verdict;
}

Verdict checkCandidateV(const WallContext& ctx, const Candidate& cand) {
  requireKind(cand, CandidateKind::ForV);
  if (cand.k1 == 0) {
    throw std::invalid_argument("rank-zero candidates are handled by excludeRankZero");
  }
  const auto& inst = ctx.instance();
  Verdict verdict;
  const auto vPrime = screen(inst, cand, verdict);
  if (!vPrime) return verdict;
  const MukaiVector u = inst.u();
  const MukaiVector v = inst.v();

  checkEffective(ctx, *vPrime, Condition::EffectivityOfCandidate, verdict);
  checkEffective(ctx, v - *vPrime, Condition::EffectivityOfComplement, verdict);

  const Rational pairing = mukaiPair(v, *vPrime);
  if (pairing != vvPrime(cand.k1, cand.e1, inst.r())) {
    throw InvariantBreach("closed-form v.v' disagrees with the Mukai pairing");
  }
  if (pairing >= 0) {
    verdict.failures.push_back({Condition::PairingSign, "vv'=" + toString(pairing)});
  }

  if (cand.k1 <= 0) {
    verdict.failures.push_back({Condition::LimitPhaseContradiction,
                                "k=" + toString(Rational(cand.k1, 2)) +
                                    " <= 0: phase ordering above sigma_u excludes ke<0"});
  } else if (cand.k1 >= 5) {
    verdict.failures.push_back(
        {Condition::PairingSign, "k=" + toString(Rational(cand.k1, 2)) + " >= 5/2"});
  }

  if (proportional(*vPrime, v) || proportional(*vPrime, u)) {
    verdict.failures.push_back({Condition::WallPosition, "W=W_{-1}"});
  } else {
    checkWallAbove(ctx, v, *vPrime, /*strict=*/false, verdict);
  }
  return verdict;
}

Verdict checkCandidateS(const ProblemInstance& inst, const Candidate& cand) {
  return checkCandidateS(WallContext(inst), cand);
}

Verdict checkCandidateT(const ProblemInstance& inst, const Candidate& cand) {
  return checkCandidateT(WallContext(inst), cand);
}

Verdict checkCandidateV(const ProblemInstance& inst, const Candidate& cand) {
  return checkCandidateV(WallContext(inst), cand);
}

namespace {

/// Which of the displayed phase inequalities fails for v' = (0, L, m), m >= 0.
std::string phaseChainBreak(const WallContext& ctx, const MukaiVector& vPrime) {
  const auto& inst = ctx.instance();
  const auto& path = ctx.path();
  const EpsRational& s = ctx.line().abscissa;
  const MukaiVector u = inst.u();
  const MukaiVector v = inst.v();

  // t -> infinity: the torsion class sits above both positive-rank classes
  if (limitPhaseClass(vPrime) == LimitPhase::PositiveRankZero) {
    throw InvariantBreach("rank-zero class with positive-rank limit phase");
  }

  const auto t1 = wallHeightSq(wallOf(v, vPrime, path), s);
  const EpsRational& t2 = ctx.heightMinusOne();
  if (!t1 || compare(*t1, t2) <= 0) return "W(v,v') is not above W_{-1} on b";

  const auto t3 = wallHeightSq(wallOf(u, vPrime, path), s);
  if (t3 && compare(*t3, t2) >= 0) return "W_m is not below W_{-1} on b";

  // a point strictly between W_m and W_{-1}
  const EpsRational low = t3 ? *t3 : EpsRational(0);
  const EpsRational mid = (low + t2) * EpsRational(Rational(1, 2));
  const CentralCharge zu = centralCharge(u, path, s);
  const CentralCharge zv = centralCharge(v, path, s);
  const CentralCharge zw = centralCharge(vPrime, path, s);
  if (phaseCompare(zu, zv, mid) <= 0) return "phi(u) > phi(v) fails below W(v,u)";
  if (phaseCompare(zw, zu, mid) <= 0) return "phi(v') > phi(u) fails above W(u,v')";
  if (phaseCompare(zv, zw, mid) <= 0) return "phi(v) > phi(v') fails below W(v,v')";
  throw InvariantBreach("cyclic phase ordering realised at a point");
}

}  // namespace

Verdict excludeRankZero(const WallContext& ctx, std::int64_t m) {
  const auto& inst = ctx.instance();
  const MukaiVector vPrime = inst.t(m);
  const Rational pairing = mukaiPair(inst.v(), vPrime);
  Verdict verdict;
  if (pairing >= 0) {
    verdict.failures.push_back({Condition::PairingSign, "vv'=" + toString(pairing)});
  } else if (m == -1) {
    verdict.failures.push_back({Condition::WallPosition, "W=W_{-1}"});
  } else {
    const std::string limit = toString(limitPhaseClass(vPrime));
    verdict.failures.push_back({Condition::LimitPhaseContradiction,
                                "limit phase " + limit + " contradiction chain (" +
                                    phaseChainBreak(ctx, vPrime) + ")"});
  }
  return verdict;
}

Verdict excludeRankZero(const ProblemInstance& inst, std::int64_t m) {
  return excludeRankZero(WallContext(inst), m);
}

SearchBounds SearchBounds::defaults(const ProblemInstance& inst) {
  SearchBounds b;
  b.k1Max = 12;
  b.e1Max = 4 * inst.r() + 4;
  b.mMax = 12;
  return b;
}

namespace {

struct RowResult {
  std::vector<Evaluated> survivors;
  std::vector<Evaluated> uSurvivors;
  std::vector<Evaluated> tSurvivors;
  std::vector<Evaluated> audit;
};

RowResult sweepRow(const WallContext& ctx, const SearchBounds& b, std::int64_t k1, bool audit) {
  const auto& inst = ctx.instance();
  RowResult row;
  auto record = [&](const Candidate& c, Verdict verdict, std::vector<Evaluated>& hits) {
    if (verdict.passed()) hits.push_back({c, verdict});
    if (audit) row.audit.push_back({c, std::move(verdict)});
  };
  for (std::int64_t e1 = -b.e1Max; e1 <= b.e1Max; ++e1) {
    if (k1 != 0) {
      const Candidate cv = Candidate::forV(inst, k1, e1);
      record(cv, checkCandidateV(ctx, cv), row.survivors);
      const Candidate cu = Candidate::forU(inst, k1, e1);
      record(cu, checkCandidateS(ctx, cu), row.uSurvivors);
    } else {
      for (std::int64_t m = -b.mMax; m <= b.mMax; ++m) {
        const Candidate cu = Candidate::forURankZero(e1, m);
        record(cu, checkCandidateS(ctx, cu), row.uSurvivors);
      }
    }
    const Candidate ct = Candidate::forT(inst, k1, e1);
    record(ct, checkCandidateT(ctx, ct), row.tSurvivors);
  }
  return row;
}

}  // namespace

SearchReport searchAll(const ProblemInstance& inst, const SearchBounds& bounds, bool audit,
                       bool parallel) {
  SearchReport report;
  report.bounds = bounds;
  if (report.bounds.e1Max == 0) report.bounds.e1Max = 4 * inst.r() + 4;
  if (report.bounds.mMax == 0) report.bounds.mMax = report.bounds.k1Max;
  const SearchBounds& b = report.bounds;
  if (b.k1Max < 1 || b.e1Max < 1 || b.mMax < 1) {
    throw std::invalid_argument("search bounds must be positive");
  }
  const WallContext ctx(inst);

  std::vector<RowResult> rows;
  if (parallel) {
    std::vector<std::future<RowResult>> pending;
    for (std::int64_t k1 = -b.k1Max; k1 <= b.k1Max; ++k1) {
      pending.push_back(std::async(std::launch::async, sweepRow, std::cref(ctx), std::cref(b), k1,
                                   audit));
    }
    for (auto& f : pending) rows.push_back(f.get());
  } else {
    for (std::int64_t k1 = -b.k1Max; k1 <= b.k1Max; ++k1) {
      rows.push_back(sweepRow(ctx, b, k1, audit));
    }
  }
  // rows are in k1 order and each row in e1 order, whatever the schedule
  for (auto& row : rows) {
    auto append = [](std::vector<Evaluated>& into, std::vector<Evaluated>& from) {
      into.insert(into.end(), std::make_move_iterator(from.begin()),
                  std::make_move_iterator(from.end()));
    };
    append(report.survivors, row.survivors);
    append(report.uSurvivors, row.uSurvivors);
    append(report.tSurvivors, row.tSurvivors);
    append(report.audit, row.audit);
  }
  for (std::int64_t m = -b.mMax; m <= b.mMax; ++m) {
    report.rankZero.push_back({m, excludeRankZero(ctx, m)});
  }
  return report;
}

Classification classify(const ProblemInstance& inst) {
  return classify(inst, searchAll(inst, SearchBounds::defaults(inst)));
}

Classification classify(const ProblemInstance& inst, const SearchReport& search) {
  Classification result;
  if (inst.lattice().classGroupNontrivial() && inst.r() == 2) {
    result.outcome = Outcome::Empty;
    result.reason = "rank two with Cl(X) != Pic(X): the restriction to L splits as O(2)+O(-2)";
  } else if (inst.r() == 1) {
    result.outcome = Outcome::ReducedPointLocallyFree;
    result.reason = "rank one: O(dH) is pulled back from X";
  } else {
    result.outcome = Outcome::ReducedPointLocallyFree;
    result.reason = "no wall of v above W_{-1} on b: E~(L) is the large-volume object, so E~ descends";
  }
  const bool searchSaysEmpty = !search.survivors.empty();
  if (searchSaysEmpty != (result.outcome == Outcome::Empty)) {
    throw InvariantBreach("classification and destabilizer search disagree");
  }
  for (const auto& rz : search.rankZero) {
    if (rz.verdict.passed()) throw InvariantBreach("rank-zero destabilizer was not excluded");
  }
  result.survivors = search.survivors;
  return result;
}

}  // namespace nodalk3
