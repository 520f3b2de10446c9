#pragma once

// Front-end commands. Each returns a JSON document whose objects have sorted
// keys; runCommand adds file output and maps errors to exit codes.

#include "nodalk3/destabilizer.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace nodalk3 {

enum class Command { Classify, Search, Walls, Pell, Descent };

struct RunConfig {
  Command command = Command::Classify;
  std::int64_t h2 = 0;
  bool clNePic = false;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t a = 0;
  std::optional<std::int64_t> k1Max;
  std::optional<std::int64_t> e1Max;
  std::int64_t mMin = -3;
  std::int64_t mMax = 3;
  std::optional<std::string> eps;
  std::optional<std::string> epsp;
  std::optional<std::string> out;
  bool audit = false;
  std::string splitting;
  bool requireZeroSum = false;
  std::int64_t bound = 10;
};

/// Bad user input; exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInvariantBreach = 3;

ProblemInstance instanceFrom(const RunConfig& cfg);

nlohmann::json cmdClassify(const RunConfig& cfg);
nlohmann::json cmdSearch(const RunConfig& cfg);
nlohmann::json cmdPell(const RunConfig& cfg);
nlohmann::json cmdDescent(const RunConfig& cfg);

struct WallsArtifact {
  std::string svg;
  nlohmann::json sidecar;
};

/// Requires eps > epsp > 0.
WallsArtifact cmdWalls(const RunConfig& cfg);

/// Runs the command, writes JSON to out (and files under cfg.out), diagnostics to err.
int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace nodalk3
