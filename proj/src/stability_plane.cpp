#include "nodalk3/stability_plane.hpp"

#include <stdexcept>

namespace nodalk3 {

EpsPoly PolarizationPath::hEpsSquared() const {
  return EpsPoly(instance_.lattice().hSquared()) - EpsPoly::monomial(2, 2, 0);
}

EpsPoly PolarizationPath::degree(const DivisorClass& divisor) const {
  // H.H_eps = H^2 and L.H_eps = 2 eps
  return EpsPoly(Rational(divisor.k1() * instance_.lattice().hSquared(), 2)) +
         EpsPoly::monomial(divisor.e1(), 1, 0);
}

namespace {

EpsRational centreAbscissa(const PolarizationPath& path) {
  const auto& inst = path.instance();
  return EpsRational(EpsPoly(inst.d() * inst.lattice().hSquared()),
                     EpsPoly(inst.r()) * path.hEpsSquared());
}

}  // namespace

VerticalLine VerticalLine::standard(const PolarizationPath& path) {
  return {path, centreAbscissa(path) - EpsRational(EpsPoly::epsPrime())};
}

VerticalLine VerticalLine::epsReading(const PolarizationPath& path) {
  return {path, centreAbscissa(path) - EpsRational(EpsPoly::eps())};
}

CentralCharge centralCharge(const MukaiVector& v, const PolarizationPath& path,
                            const EpsRational& s) {
  const EpsRational q = path.hEpsSquared();
  const EpsRational c = path.degree(v.divisor());
  const EpsRational rank = EpsPoly(v.rank());
  const EpsRational half = EpsPoly(Rational(1, 2));
  CentralCharge z;
  z.re0 = EpsRational(EpsPoly(-v.degree())) - half * rank * s * s * q + s * c;
  z.reT2 = half * rank * q;
  z.im = c - rank * s * q;
  return z;
}

EpsPoly effectivityDefect(const MukaiVector& v, const VerticalLine& line) {
  const EpsRational im = EpsRational(line.path.degree(v.divisor())) -
                        EpsRational(EpsPoly(v.rank()) * line.path.hEpsSquared()) * line.abscissa;
  if (auto p = im.asPoly()) return *p;
  return im.numerator();
}

EpsRational NumericalWall::evaluate(const EpsRational& s, const EpsRational& tSquared) const {
  return EpsRational(alpha) * (s * s + tSquared) + EpsRational(beta) * s + EpsRational(gamma);
}

bool NumericalWall::sameLocus(const NumericalWall& other) const {
  return (alpha * other.beta - other.alpha * beta).isZero() &&
         (alpha * other.gamma - other.alpha * gamma).isZero() &&
         (beta * other.gamma - other.beta * gamma).isZero();
}

NumericalWall wallOf(const MukaiVector& w1, const MukaiVector& w2, const PolarizationPath& path) {
  if (proportional(w1, w2)) throw std::invalid_argument("degenerate wall");
  const EpsPoly q = path.hEpsSquared();
  const EpsPoly c1 = path.degree(w1.divisor());
  const EpsPoly c2 = path.degree(w2.divisor());
  const EpsPoly r1(w1.rank()), r2(w2.rank()), a1(w1.degree()), a2(w2.degree());
  // Re Z(w1) Im Z(w2) - Re Z(w2) Im Z(w1), divided by t; the cubic terms in s cancel
  NumericalWall wall;
  wall.alpha = EpsPoly(Rational(1, 2)) * q * (r1 * c2 - r2 * c1);
  wall.beta = q * (a1 * r2 - a2 * r1);
  wall.gamma = a2 * c1 - a1 * c2;
  if (wall.alpha.isZero() && wall.beta.isZero() && wall.gamma.isZero()) {
    throw std::invalid_argument("degenerate wall");
  }
  return wall;
}

std::optional<EpsRational> wallHeightSq(const NumericalWall& wall, const EpsRational& s) {
  if (wall.isVertical()) throw std::domain_error("vertical wall has no height function");
  const EpsRational tSq =
      -(EpsRational(wall.beta) * s + EpsRational(wall.gamma)) / EpsRational(wall.alpha) - s * s;
  if (tSq.sign() <= 0) return std::nullopt;
  return tSq;
}

SigmaU SigmaU::of(const PolarizationPath& path) {
  const auto& inst = path.instance();
  const EpsRational rq = EpsRational(EpsPoly(inst.r()) * path.hEpsSquared());
  SigmaU p;
  p.s = EpsRational(EpsPoly(inst.d() * inst.lattice().hSquared())) / rq;
  p.tSquared = EpsRational(EpsPoly(2 * inst.a())) / rq - p.s * p.s;
  return p;
}

EpsRational slopeAtSigmaU(std::int64_t m, const PolarizationPath& path) {
  const auto& inst = path.instance();
  const EpsPoly q = path.hEpsSquared();
  const EpsPoly eps = EpsPoly::eps();
  return EpsRational(EpsPoly(inst.r() * m) * q - EpsPoly(2 * inst.d() * inst.lattice().hSquared()) * eps,
                     EpsPoly(2 * inst.r()) * eps * q);
}

std::strong_ordering phaseCompare(const CentralCharge& z1, const CentralCharge& z2,
                                  const EpsRational& tSquared) {
  const EpsRational re1 = z1.realPart(tSquared);
  const EpsRational re2 = z2.realPart(tSquared);
  const int im1 = z1.im.sign();
  const int im2 = z2.im.sign();
  if ((im1 == 0 && re1.isZero()) || (im2 == 0 && re2.isZero())) {
    throw std::domain_error("charge vanishes (sigma_u-like point)");
  }
  const bool upper1 = im1 > 0 || (im1 == 0 && re1.sign() < 0);
  const bool upper2 = im2 > 0 || (im2 == 0 && re2.sign() < 0);
  if (upper1 != upper2) return upper1 ? std::strong_ordering::greater : std::strong_ordering::less;
  // counter-clockwise from z1 to z2 means phase(z1) < phase(z2)
  const int cross = (re1 * z2.im - z1.im * re2).sign();
  if (cross > 0) return std::strong_ordering::less;
  if (cross < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LimitPhase limitPhaseClass(const MukaiVector& v) {
  if (v.rank() > 0) return LimitPhase::PositiveRankZero;
  if (v.rank() == 0 && v.divisor() == DivisorClass::L(v.lattice()) && v.degree() >= 0) {
    return v.degree() == 0 ? LimitPhase::TorsionHalf : LimitPhase::TorsionOne;
  }
  throw std::invalid_argument("limit phase is only classified for positive rank or (0, L, m>=0)");
}

const char* toString(LimitPhase phase) {
  switch (phase) {
    case LimitPhase::PositiveRankZero: return "0";
    case LimitPhase::TorsionHalf: return "1/2";
    case LimitPhase::TorsionOne: return "1";
  }
  return "?";
}

}  // namespace nodalk3
