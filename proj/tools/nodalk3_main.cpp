#include "nodalk3/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace nodalk3;

namespace {

void addInstanceFlags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--h2", cfg.h2, "H^2 of the nodal surface")->required();
  cmd->add_flag("--cl-ne-pic", cfg.clNePic, "class group Z/2 (requires H^2 = 2 mod 8)");
  cmd->add_option("--r", cfg.r, "rank")->required();
  cmd->add_option("--d", cfg.d, "c1 = dH")->required();
  cmd->add_option("--a", cfg.a, "degree part of the Mukai vector")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable spherical sheaves on general nodal K3 surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classify = app.add_subcommand("classify", "decide emptiness of the moduli space");
  addInstanceFlags(classify, cfg);
  classify->add_option("--out", cfg.out, "write JSON here instead of stdout");

  auto* search = app.add_subcommand("search", "exhaustive destabilizer search");
  addInstanceFlags(search, cfg);
  search->add_option("--k1-max", cfg.k1Max, "|k1| bound (default 12)");
  search->add_option("--e1-max", cfg.e1Max, "|e1| bound (default 4r+4)");
  search->add_flag("--audit", cfg.audit, "list every candidate with its failures");
  search->add_option("--out", cfg.out, "write JSON here instead of stdout");

  auto* walls = app.add_subcommand("walls", "SVG of the walls W_m at a numeric (eps, eps')");
  addInstanceFlags(walls, cfg);
  walls->add_option("--eps", cfg.eps, "eps as p/q")->required();
  walls->add_option("--epsp", cfg.epsp, "eps' as p/q")->required();
  walls->add_option("--m-min", cfg.mMin, "first m (default -3)");
  walls->add_option("--m-max", cfg.mMax, "last m (default 3)");
  walls->add_option("--out", cfg.out, "SVG path; the JSON sidecar goes to <out>.json")->required();

  auto* pell = app.add_subcommand("pell", "solutions of x^2 - r x y + y^2 = 1");
  pell->add_option("--r", cfg.r, "rank")->required();
  pell->add_option("--bound", cfg.bound, "search |x|, |y| <= bound (default 10)");
  pell->add_option("--out", cfg.out, "write JSON here instead of stdout");

  auto* descent = app.add_subcommand("descent", "splitting-type descent criterion");
  descent->add_option("--splitting", cfg.splitting, "comma list a1,a2,...")
      ->required()
      ->allow_extra_args(false);
  descent->add_flag("--require-zero-sum", cfg.requireZeroSum, "reject splittings with nonzero sum");
  descent->add_option("--out", cfg.out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  if (classify->parsed()) cfg.command = Command::Classify;
  if (search->parsed()) cfg.command = Command::Search;
  if (walls->parsed()) cfg.command = Command::Walls;
  if (pell->parsed()) cfg.command = Command::Pell;
  if (descent->parsed()) cfg.command = Command::Descent;
  return runCommand(cfg, std::cout, std::cerr);
}
