#include "nodalk3/report.hpp"

#include "nodalk3/splitting.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace nodalk3 {

using nlohmann::json;

ProblemInstance instanceFrom(const RunConfig& cfg) {
  const NSLattice lattice(cfg.h2, cfg.clNePic);
  return ProblemInstance(lattice, cfg.r, cfg.d, cfg.a);
}

namespace {

json instanceJson(const RunConfig& cfg) {
  return {{"h2", cfg.h2}, {"cl_ne_pic", cfg.clNePic}, {"r", cfg.r}, {"d", cfg.d}, {"a", cfg.a}};
}

std::string vectorString(const MukaiVector& w) {
  const DivisorClass& D = w.divisor();
  return "(" + std::to_string(w.rank()) + ", (" + std::to_string(D.k1()) + "H + " +
         std::to_string(D.e1()) + "L)/2, " + std::to_string(w.degree()) + ")";
}

json candidateJson(const ProblemInstance& inst, const Candidate& c) {
  json j = {{"kind", toString(c.kind)},
            {"k1", c.k1},
            {"e1", c.e1},
            {"k", toString(Rational(c.k1, 2))},
            {"e", toString(Rational(c.e1, 2))},
            {"m", toString(c.m)}};
  const auto vec = candidateVector(inst, c);
  j["vector"] = vec ? json(vectorString(*vec)) : json(nullptr);
  return j;
}

json failuresJson(const Verdict& v) {
  json list = json::array();
  for (const auto& f : v.failures) list.push_back(f.describe());
  return list;
}

json evaluatedList(const ProblemInstance& inst, const std::vector<Evaluated>& items, bool verdicts) {
  json list = json::array();
  for (const auto& e : items) {
    json j = candidateJson(inst, e.candidate);
    if (verdicts) {
      j["passed"] = e.verdict.passed();
      j["failures"] = failuresJson(e.verdict);
    }
    list.push_back(std::move(j));
  }
  return list;
}

std::string mod8Note(const NSLattice& lattice) {
  const std::int64_t h = lattice.hSquared();
  if (lattice.classGroupNontrivial()) return "H^2 = " + std::to_string(h) + " = 2 mod 8: Cl(X) = Z/2 admissible";
  if (h % 8 == 2) return "H^2 = " + std::to_string(h) + " = 2 mod 8: Cl(X) may be Z/2 (see --cl-ne-pic)";
  return "H^2 = " + std::to_string(h) + " != 2 mod 8: Cl(X) = Pic(X)";
}

std::int64_t positiveBound(const std::optional<std::int64_t>& value, const char* name) {
  if (value && *value < 1) throw InputError(std::string(name) + " must be positive");
  return value.value_or(0);
}

Rational parseOrThrow(const std::optional<std::string>& text, const char* name) {
  if (!text) throw InputError(std::string("--") + name + " is required");
  try {
    return parseRational(*text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

// --- wall diagram ---------------------------------------------------------

using Decimal = boost::multiprecision::cpp_dec_float_50;

Decimal toDecimal(const Rational& q) {
  return Decimal(boost::multiprecision::numerator(q).str()) /
         Decimal(boost::multiprecision::denominator(q).str());
}

std::string fixed12(const Decimal& x) {
  std::string s = x.str(12, std::ios_base::fixed);
  if (s == "-0.000000000000") s = "0.000000000000";
  return s;
}

/// A semicircle alpha (s^2 + t^2) + beta s + gamma = 0 at fixed (eps, eps').
struct Circle {
  Rational centre;
  Rational radiusSq;
};

std::optional<Circle> circleAt(const NumericalWall& wall, const Rational& eps,
                               const Rational& epsp) {
  const Rational alpha = wall.alpha.instantiate(eps, epsp);
  if (alpha == 0) return std::nullopt;
  const Rational beta = wall.beta.instantiate(eps, epsp);
  const Rational gamma = wall.gamma.instantiate(eps, epsp);
  Circle c{-beta / (2 * alpha), 0};
  c.radiusSq = c.centre * c.centre - gamma / alpha;
  if (c.radiusSq <= 0) return std::nullopt;
  return c;
}

struct Window {
  Decimal xMin, xMax, tMax, scale;

  Decimal px(const Decimal& s) const { return (s - xMin) * scale; }
  Decimal py(const Decimal& t) const { return (tMax - t) * scale; }

  bool meets(const Decimal& centre, const Decimal& radius) const {
    // nearest and farthest points of [xMin, xMax] x [0, tMax] from (centre, 0)
    const Decimal nearX = centre < xMin ? xMin : (centre > xMax ? xMax : centre);
    const Decimal near = abs(centre - nearX);
    const Decimal farX = std::max(abs(centre - xMin), abs(centre - xMax));
    const Decimal far = sqrt(farX * farX + tMax * tMax);
    return near <= radius && radius <= far;
  }
};

constexpr int kWidthPx = 800;
constexpr int kHeightPx = 400;

}  // namespace

json cmdClassify(const RunConfig& cfg) {
  const ProblemInstance inst = instanceFrom(cfg);
  const Classification c = classify(inst);
  const std::int64_t g = std::gcd(cfg.r, std::gcd(cfg.d, cfg.a));
  return {{"instance", instanceJson(cfg)},
          {"spherical_check", {{"u_squared", toString(inst.u().square())}, {"ok", true}}},
          {"gcd_check", {{"gcd", g}, {"ok", g == 1}}},
          {"outcome", toString(c.outcome)},
          {"reason", c.reason},
          {"mod8_note", mod8Note(inst.lattice())},
          {"survivors", evaluatedList(inst, c.survivors, false)}};
}

json cmdSearch(const RunConfig& cfg) {
  const ProblemInstance inst = instanceFrom(cfg);
  SearchBounds bounds = SearchBounds::defaults(inst);
  if (cfg.k1Max) bounds.k1Max = positiveBound(cfg.k1Max, "--k1-max");
  if (cfg.e1Max) bounds.e1Max = positiveBound(cfg.e1Max, "--e1-max");
  const SearchReport report = searchAll(inst, bounds, cfg.audit);

  json rankZero = json::array();
  for (const auto& rz : report.rankZero) {
    rankZero.push_back(
        {{"m", rz.m}, {"excluded", !rz.verdict.passed()}, {"failures", failuresJson(rz.verdict)}});
  }
  json doc = {{"instance", instanceJson(cfg)},
              {"bounds",
               {{"k1_max", report.bounds.k1Max},
                {"e1_max", report.bounds.e1Max},
                {"m_max", report.bounds.mMax}}},
              {"survivors", evaluatedList(inst, report.survivors, false)},
              {"u_survivors", evaluatedList(inst, report.uSurvivors, false)},
              {"t_survivors", evaluatedList(inst, report.tSurvivors, false)},
              {"rank_zero", rankZero}};
  if (cfg.audit) doc["audit"] = evaluatedList(inst, report.audit, true);
  return doc;
}

json cmdPell(const RunConfig& cfg) {
  if (cfg.r < 1) throw InputError("--r must be at least 1");
  if (cfg.bound < 1) throw InputError("--bound must be at least 1");
  json solutions = json::array();
  for (const auto& [x, y] : pellSolutions(cfg.r, cfg.bound)) solutions.push_back({x, y});
  return {{"r", cfg.r},
          {"bound", cfg.bound},
          {"equation", "x^2 - r x y + y^2 = 1"},
          {"solutions", solutions},
          {"minimal", isMinimalPellPair(cfg.r)},
          {"minimality_window", pellMinimalityBound(cfg.r)}};
}

json cmdDescent(const RunConfig& cfg) {
  std::vector<std::int64_t> parts;
  std::stringstream stream(cfg.splitting);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::int64_t value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw InputError("--splitting: malformed part '" + item + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw InputError("--splitting needs at least one part");
  const SplittingType s(parts);
  if (cfg.requireZeroSum && !s.zeroSum()) throw InputError("criterion requires c1.L = 0");
  return {{"splitting", s.parts()},
          {"sum", s.sum()},
          {"zero_sum", s.zeroSum()},
          {"descends", s.zeroSum() ? json(descends(s)) : json(nullptr)},
          {"hom_dim_twist_minus2", homDimOnL(s, -2)},
          {"criterion_agrees", s.zeroSum() ? json(homCriterionAgrees(s)) : json(nullptr)}};
}

WallsArtifact cmdWalls(const RunConfig& cfg) {
  const Rational eps = parseOrThrow(cfg.eps, "eps");
  const Rational epsp = parseOrThrow(cfg.epsp, "epsp");
  if (!(eps > epsp && epsp > 0)) throw InputError("need eps > epsp > 0");
  const ProblemInstance inst = instanceFrom(cfg);
  const PolarizationPath path(inst);

  const auto outer = circleAt(wallOf(inst.u(), inst.t(-1), path), eps, epsp);
  if (!outer) throw InputError("W_{-1} degenerates at this (eps, epsp)");
  const Decimal outerCentre = toDecimal(outer->centre);
  const Decimal outerRadius = sqrt(toDecimal(outer->radiusSq));
  Window win;
  win.xMin = outerCentre - outerRadius * Decimal("1.2");
  win.xMax = outerCentre + outerRadius * Decimal("1.2");
  win.tMax = outerRadius * Decimal("1.2");
  win.scale = Decimal(kWidthPx) / (win.xMax - win.xMin);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidthPx << "\" height=\""
      << kHeightPx << "\" viewBox=\"0 0 " << kWidthPx << ' ' << kHeightPx << "\">\n"
      << "<defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << kWidthPx
      << "\" height=\"" << kHeightPx << "\"/></clipPath></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidthPx << "\" height=\"" << kHeightPx
      << "\" fill=\"white\"/>\n"
      << "<g clip-path=\"url(#window)\" fill=\"none\" stroke-width=\"1\">\n";

  json walls = json::array();
  for (std::int64_t m = cfg.mMin; m <= cfg.mMax; ++m) {
    json entry = {{"m", m}, {"drawn", false}, {"note", ""}, {"centre", nullptr}, {"radius", nullptr}};
    const auto circle = circleAt(wallOf(inst.u(), inst.t(m), path), eps, epsp);
    if (!circle) {
      entry["note"] = "no real semicircle at this (eps, epsp)";
      walls.push_back(std::move(entry));
      continue;
    }
    const Decimal c = toDecimal(circle->centre);
    const Decimal rad = sqrt(toDecimal(circle->radiusSq));
    entry["centre"] = fixed12(c);
    entry["radius"] = fixed12(rad);
    if (!win.meets(c, rad)) {
      entry["note"] = "outside the plotted window";
      walls.push_back(std::move(entry));
      continue;
    }
    entry["drawn"] = true;
    const std::string y0 = fixed12(win.py(0));
    const std::string r = fixed12(rad * win.scale);
    svg << "<path class=\"wall\" data-m=\"" << m << "\" stroke=\"" << (m == -1 ? "#c0392b" : "#2c3e50")
        << "\" d=\"M " << fixed12(win.px(c - rad)) << ' ' << y0 << " A " << r << ' ' << r
        << " 0 0 1 " << fixed12(win.px(c + rad)) << ' ' << y0 << "\"/>\n";
    walls.push_back(std::move(entry));
  }

  const VerticalLine line = VerticalLine::standard(path);
  const Rational sB = line.abscissa.instantiate(eps, epsp);
  const Decimal sBDec = toDecimal(sB);
  svg << "<line class=\"line-b\" stroke=\"#27ae60\" stroke-dasharray=\"4 3\" x1=\""
      << fixed12(win.px(sBDec)) << "\" y1=\"" << fixed12(win.py(0)) << "\" x2=\""
      << fixed12(win.px(sBDec)) << "\" y2=\"" << fixed12(win.py(win.tMax)) << "\"/>\n";
  svg << "</g>\n";

  const SigmaU sigma = SigmaU::of(path);
  const Decimal sigmaS = toDecimal(sigma.s.instantiate(eps, epsp));
  const Decimal sigmaT = sqrt(toDecimal(sigma.tSquared.instantiate(eps, epsp)));
  svg << "<circle class=\"sigma-u\" cx=\"" << fixed12(win.px(sigmaS)) << "\" cy=\""
      << fixed12(win.py(sigmaT)) << "\" r=\"3\" fill=\"black\"/>\n";

  json markers = json::object();
  const Rational heightSq = outer->radiusSq - (sB - outer->centre) * (sB - outer->centre);
  if (heightSq > 0) {
    const Decimal t0 = sqrt(toDecimal(heightSq));
    const Decimal delta = t0 / 10;
    const std::pair<const char*, Decimal> points[] = {
        {"sigma_plus", t0 + delta}, {"sigma_0", t0}, {"sigma_minus", t0 - delta}};
    for (const auto& [name, t] : points) {
      markers[name] = {{"s", fixed12(sBDec)}, {"t", fixed12(t)}};
      svg << "<circle class=\"marker\" data-name=\"" << name << "\" cx=\"" << fixed12(win.px(sBDec))
          << "\" cy=\"" << fixed12(win.py(t)) << "\" r=\"2\" fill=\"#8e44ad\"/>\n";
    }
  }
  svg << "</svg>\n";

  WallsArtifact artifact;
  artifact.svg = svg.str();
  artifact.sidecar = {
      {"instance", instanceJson(cfg)},
      {"eps", toString(eps)},
      {"epsp", toString(epsp)},
      {"m_range", {cfg.mMin, cfg.mMax}},
      {"window",
       {{"s_min", fixed12(win.xMin)}, {"s_max", fixed12(win.xMax)}, {"t_max", fixed12(win.tMax)}}},
      {"line_b", {{"s", fixed12(sBDec)}}},
      {"sigma_u", {{"s", fixed12(sigmaS)}, {"t", fixed12(sigmaT)}}},
      {"markers", markers},
      {"walls", walls},
  };
  return artifact;
}

namespace {

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path + " for writing");
  file << content;
  if (!file) throw InputError("failed writing " + path);
}

}  // namespace

int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == Command::Walls) {
      if (!cfg.out) throw InputError("walls writes SVG only via --out");
      const WallsArtifact artifact = cmdWalls(cfg);
      const std::string sidecar = artifact.sidecar.dump(2) + "\n";
      writeFile(*cfg.out, artifact.svg);
      writeFile(*cfg.out + ".json", sidecar);
      out << sidecar;
      return kExitOk;
    }
    json doc;
    switch (cfg.command) {
      case Command::Classify: doc = cmdClassify(cfg); break;
      case Command::Search: doc = cmdSearch(cfg); break;
      case Command::Pell: doc = cmdPell(cfg); break;
      case Command::Descent: doc = cmdDescent(cfg); break;
      case Command::Walls: break;
    }
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out) {
      writeFile(*cfg.out, text);
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const InvariantBreach& e) {
    err << "invariant breach: " << e.what() << "\n";
    return kExitInvariantBreach;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    err << "invariant breach: " << e.what() << "\n";
    return kExitInvariantBreach;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace nodalk3
