#pragma once

// Geometry of the (s, t) half-plane of stability conditions sigma_(s,t) with
// beta = s H_eps and omega = t H_eps, where H_eps = H - eps L.
//
// t itself is never represented. Walls give t^2 rationally and Im Z is linear
// in t, so charges carry the coefficient of t and points carry t^2.

#include "nodalk3/asymptotics.hpp"
#include "nodalk3/lattice.hpp"

#include <compare>
#include <optional>

namespace nodalk3 {

class PolarizationPath {
 public:
  explicit PolarizationPath(ProblemInstance instance) : instance_(std::move(instance)) {}

  const ProblemInstance& instance() const { return instance_; }

  /// H_eps^2 = H^2 - 2 eps^2
  EpsPoly hEpsSquared() const;
  /// D . H_eps = (k1 H^2)/2 + e1 eps for D = (k1 H + e1 L)/2
  EpsPoly degree(const DivisorClass& divisor) const;

 private:
  ProblemInstance instance_;
};

struct VerticalLine {
  PolarizationPath path;
  EpsRational abscissa;

  /// The line b: s(eps') = dH.H_eps / (r H_eps^2) - eps'.
  static VerticalLine standard(const PolarizationPath& path);
  /// The same construction with eps' replaced by eps.
  static VerticalLine epsReading(const PolarizationPath& path);
};

/// Z = (re0 + reT2 t^2) + i t im
struct CentralCharge {
  EpsRational re0;
  EpsRational reT2;
  EpsRational im;

  EpsRational realPart(const EpsRational& tSquared) const { return re0 + reT2 * tSquared; }
};

CentralCharge centralCharge(const MukaiVector& v, const PolarizationPath& path,
                            const EpsRational& s);

/// H_eps . (c1(v) - rk(v) s H_eps) on the line, with the positive denominator
/// cleared when the expression does not reduce to a polynomial.
EpsPoly effectivityDefect(const MukaiVector& v, const VerticalLine& line);

/// The locus alpha (s^2 + t^2) + beta s + gamma = 0 where two charges align.
struct NumericalWall {
  EpsPoly alpha;
  EpsPoly beta;
  EpsPoly gamma;

  bool isVertical() const { return alpha.isZero(); }
  EpsRational evaluate(const EpsRational& s, const EpsRational& tSquared) const;
  /// Same locus: coefficient triples proportional.
  bool sameLocus(const NumericalWall& other) const;
};

/// Throws std::invalid_argument("degenerate wall") for proportional inputs.
NumericalWall wallOf(const MukaiVector& w1, const MukaiVector& w2, const PolarizationPath& path);

/// t^2 where the wall meets the vertical line through s; nullopt when t^2 <= 0.
/// Throws std::domain_error for a vertical wall.
std::optional<EpsRational> wallHeightSq(const NumericalWall& wall, const EpsRational& s);

/// The point where the extended central charge of u vanishes.
struct SigmaU {
  EpsRational s;
  EpsRational tSquared;

  static SigmaU of(const PolarizationPath& path);
};

/// dW_m/ds at sigma_u, multiplied by the positive factor t:
/// (r m H_eps^2 - 2 eps d H^2) / (2 eps r H_eps^2).
EpsRational slopeAtSigmaU(std::int64_t m, const PolarizationPath& path);

/// Compares phases of two charges at the point with the given t^2 (t > 0).
/// Phases live in (-1, 1]; the negative real ray has phase 1.
/// Throws std::domain_error when either charge vanishes there.
std::strong_ordering phaseCompare(const CentralCharge& z1, const CentralCharge& z2,
                                  const EpsRational& tSquared);

enum class LimitPhase { PositiveRankZero, TorsionHalf, TorsionOne };

/// Limit of the phase as t -> infinity. Supports positive rank and (0, L, m) with m >= 0.
LimitPhase limitPhaseClass(const MukaiVector& v);

const char* toString(LimitPhase phase);

}  // namespace nodalk3
