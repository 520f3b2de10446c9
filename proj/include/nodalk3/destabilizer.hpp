#pragma once

// Searches for destabilizing spherical classes along the line b:
//   ForU  - subobjects u' of u above W_{-1}    (E~ is sigma_0-stable)
//   ForT  - Jordan-Holder factors g of t_{-1}  (O_L(-2) is sigma_0-stable)
//   ForV  - walls W(v, v') of v above W_{-1}   (E~(L) is the large-volume object)
// and the closed-form classification that the searches must agree with.

#include "nodalk3/lattice.hpp"
#include "nodalk3/stability_plane.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodalk3 {

enum class CandidateKind { ForU, ForT, ForV };

const char* toString(CandidateKind kind);

/// ForU/ForV: (k1 r/2, (k1 dH + e1 L)/2, m).
/// ForT: g = (e1/2) t_{-1} + (k1/2) u, so e1 = 2e' and m is the degree of g.
struct Candidate {
  std::int64_t k1 = 0;
  std::int64_t e1 = 0;
  Rational m;
  CandidateKind kind = CandidateKind::ForV;

  /// m forced by sphericality (k1 != 0).
  static Candidate forU(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1);
  /// Rank-zero subobject (0, (e1/2) L, m) of u.
  static Candidate forURankZero(std::int64_t e1, std::int64_t m);
  static Candidate forV(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1);
  static Candidate forT(const ProblemInstance& inst, std::int64_t k1, std::int64_t e1);

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// The Mukai vector a candidate denotes, if it is an integral lattice class.
std::optional<MukaiVector> candidateVector(const ProblemInstance& inst, const Candidate& cand);

enum class Condition {
  Parity,
  Sphericality,
  EffectivityOfCandidate,
  EffectivityOfComplement,
  PairingSign,
  WallPosition,
  LimitPhaseContradiction,
};

const char* toString(Condition condition);

struct Failure {
  Condition condition;
  std::string detail;

  /// "name: detail"
  std::string describe() const;
};

struct Verdict {
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  bool failed(Condition c) const;
};

/// m = k a - (k^2 + e^2 - 1)/(k r) with k = k1/2, e = e1/2.
Rational mFromKE(std::int64_t k1, std::int64_t e1, const ProblemInstance& inst);

/// v.v' = -k - 2 e r + (e^2 - 1)/k + k r^2 with k = k1/2, e = e1/2.
Rational vvPrime(std::int64_t k1, std::int64_t e1, std::int64_t r);

/// Shared per-instance data: the path, the line b, W_{-1} and its height on b.
class WallContext {
 public:
  explicit WallContext(const ProblemInstance& inst);
  WallContext(const ProblemInstance& inst, VerticalLine line);

  const ProblemInstance& instance() const { return path_.instance(); }
  const PolarizationPath& path() const { return path_; }
  const VerticalLine& line() const { return line_; }
  const NumericalWall& wallMinusOne() const { return w_minus_one_; }
  const EpsRational& heightMinusOne() const { return height_minus_one_; }

  /// Sign of t^2(wall) - t^2(W_{-1}) on b, without solving for t^2(wall).
  int compareWithMinusOne(const NumericalWall& wall) const;
  /// effectivityDefect(w, line()) times a positive factor.
  EpsPoly scaledDefect(const MukaiVector& w) const;

 private:
  PolarizationPath path_;
  VerticalLine line_;
  NumericalWall w_minus_one_;
  EpsRational height_minus_one_;
  // s = s_num / s_den, denominator positive
  EpsPoly s_num_, s_den_, q_;
  // (s^2 + t^2(W_{-1}), s, 1) times a common positive denominator
  EpsPoly point_alpha_, point_beta_, point_gamma_;
};

Verdict checkCandidateS(const WallContext& ctx, const Candidate& cand);
Verdict checkCandidateT(const WallContext& ctx, const Candidate& cand);
Verdict checkCandidateV(const WallContext& ctx, const Candidate& cand);

Verdict checkCandidateS(const ProblemInstance& inst, const Candidate& cand);
Verdict checkCandidateT(const ProblemInstance& inst, const Candidate& cand);
Verdict checkCandidateV(const ProblemInstance& inst, const Candidate& cand);

/// Exclusion of the rank-zero class v' = (0, L, m) as a destabilizer of v.
/// passed() == false means excluded; the failure records the reason.
Verdict excludeRankZero(const WallContext& ctx, std::int64_t m);
Verdict excludeRankZero(const ProblemInstance& inst, std::int64_t m);

struct SearchBounds {
  std::int64_t k1Max = 12;
  std::int64_t e1Max = 0;  ///< 0 selects 4r + 4
  std::int64_t mMax = 0;   ///< rank-zero degree range [-mMax, mMax]; 0 selects k1Max

  static SearchBounds defaults(const ProblemInstance& inst);
};

struct Evaluated {
  Candidate candidate;
  Verdict verdict;
};

struct RankZeroOutcome {
  std::int64_t m;
  Verdict verdict;
};

struct SearchReport {
  SearchBounds bounds;
  std::vector<Evaluated> survivors;       ///< ForV candidates that pass
  std::vector<RankZeroOutcome> rankZero;  ///< one per m in range
  std::vector<Evaluated> uSurvivors;      ///< ForU candidates that pass
  std::vector<Evaluated> tSurvivors;      ///< ForT candidates that pass
  std::vector<Evaluated> audit;           ///< every candidate examined, when requested
};

/// Exhaustive sweep over |k1| <= k1Max, |e1| <= e1Max. Output order is
/// deterministic. Throws std::invalid_argument for nonpositive bounds.
SearchReport searchAll(const ProblemInstance& inst, const SearchBounds& bounds,
                       bool audit = false, bool parallel = true);

enum class Outcome { Empty, ReducedPointLocallyFree };

const char* toString(Outcome outcome);

struct Classification {
  Outcome outcome;
  std::string reason;
  std::vector<Evaluated> survivors;
};

/// Raised when the closed-form classification and the search disagree.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed-form outcome, cross-checked against a fresh default search.
Classification classify(const ProblemInstance& inst);
/// Same, cross-checked against a search the caller already ran.
Classification classify(const ProblemInstance& inst, const SearchReport& search);

}  // namespace nodalk3
