#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photonkin/app/config.hpp"
#include "photonkin/app/scenarios.hpp"

namespace app = photonkin::app;

int main(int argc, char** argv) {
  CLI::App cli{"photonkin: single-photon packet on an excited two-level atom"};
  cli.footer(app::csv_schemas() + "\n\nDefault configuration (all keys):\n" +
             app::default_config_text());
  cli.require_subcommand(1);

  auto* run = cli.add_subcommand("run", "Run one scenario and write CSV (and optional SVG)");
  std::string scenario, config_file, out_dir;
  std::vector<std::string> overrides;
  bool svg = false;
  run->add_option("scenario", scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember(app::scenario_names()));
  run->add_option("--config", config_file, "INI file with [physics], [numerics], [output]");
  run->add_option("--out", out_dir, "Output directory (overrides output.dir)");
  run->add_flag("--svg", svg, "Also write SVG plots");
  run->add_option("--set", overrides, "Override one key, section.key=value (repeatable)");

  auto* defaults = cli.add_subcommand("defaults", "Print the default configuration");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*defaults) {
    std::cout << app::default_config_text();
    return 0;
  }

  try {
    app::RunConfig cfg;
    if (!config_file.empty()) cfg = app::load_config(config_file, cfg);
    for (const auto& o : overrides) app::apply_override(cfg, o);
    cfg.scenario = scenario;
    if (!out_dir.empty()) cfg.output.dir = out_dir;
    if (svg) cfg.output.svg = true;
    const auto manifest = app::run(cfg);
    std::cout << manifest.summary_text();
    return 0;
  } catch (const app::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const photonkin::SolverError& e) {
    std::cerr << "solver failure in " << e.what() << '\n';
    return 3;
  } catch (const photonkin::InvalidArgument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
