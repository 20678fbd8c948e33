#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lagpants/tools/commands.hpp"

#ifndef LAGPANTS_DEFAULT_FIXTURES
#define LAGPANTS_DEFAULT_FIXTURES "fixtures"
#endif

using namespace lagpants::tools;

int main(int argc, char** argv) {
  RunConfig cfg;
  for (int i = 0; i < argc; ++i) cfg.command_line += (i ? " " : "") + std::string(argv[i]);
  cfg.fixtures = LAGPANTS_DEFAULT_FIXTURES;

  CLI::App app{"Lagrangian lifts of tropical curves"};
  app.require_subcommand(1);
  std::vector<std::string> twists;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--resolution", cfg.resolution, "samples per unit of pi")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for random sampling")->capture_default_str();
    sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
  };

  auto* trop = app.add_subcommand("tropical", "curve and dual subdivision of a polytope with lifting");
  common(trop);
  trop->add_option("input", cfg.inputs, "fixture file")->required()->expected(1);
  trop->add_flag("--check-smooth", cfg.check_smooth, "print whether the curve is smooth");
  trop->add_flag("--default-zero", cfg.default_zero, "missing lifting values are 0");

  auto* pants = app.add_subcommand("pants", "region H, sections and Hessian sweep of the pair of pants");
  common(pants);
  pants->add_option("--n", cfg.n, "n, the pants has dimension n + 1")->capture_default_str();
  pants->add_option("--lambda", cfg.lambda, "scale of the pants")->capture_default_str();
  pants->add_option("--section", cfg.section, "plane section for n = 2, as t=0.2");

  auto* lift = app.add_subcommand("lift", "PL and smooth Lagrangian lift of a curve");
  common(lift);
  lift->add_option("input", cfg.inputs, "fixture file")->required()->expected(1);
  lift->add_option("--scale", cfg.scale, "scale t in (0, 1]")->capture_default_str();
  lift->add_flag("--pl-only", cfg.pl_only, "sample the PL lift only");
  lift->add_option("--twist", twists, "edge=E,winding=N; repeatable");
  lift->add_option("--truncation", cfg.truncation, "distance at which rays are cut");
  lift->add_flag("--default-zero", cfg.default_zero, "missing lifting values are 0");

  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  common(verify);
  verify->add_option("suite", cfg.suite, "suite name or all")->capture_default_str();
  verify->add_option("--fixtures", cfg.fixtures, "fixture directory")->capture_default_str();

  auto* toric = app.add_subcommand("toric", "boundary classification, topology and monotonicity");
  common(toric);
  toric->add_option("input", cfg.inputs, "curve fixture, then optionally a polygon fixture")->required()->expected(1, 2);
  toric->add_flag("--default-zero", cfg.default_zero, "missing lifting values are 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  for (const auto& t : twists) {
    try {
      add_twist(cfg, t);
    } catch (const std::exception& e) {
      std::cerr << "input error: " << e.what() << '\n';
      return kInputError;
    }
  }

  if (*trop) return run_guarded(cmd_tropical, cfg, std::cout, std::cerr);
  if (*pants) return run_guarded(cmd_pants, cfg, std::cout, std::cerr);
  if (*lift) return run_guarded(cmd_lift, cfg, std::cout, std::cerr);
  if (*verify) return run_guarded(cmd_verify, cfg, std::cout, std::cerr);
  return run_guarded(cmd_toric, cfg, std::cout, std::cerr);
}
