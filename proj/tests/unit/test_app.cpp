#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "photonkin/app/config.hpp"
#include "photonkin/app/output.hpp"
#include "photonkin/app/scenarios.hpp"

using namespace photonkin;
using namespace photonkin::app;

TEST_CASE("default config text round-trips") {
  const auto cfg = parse_config(default_config_text());
  const RunConfig def;
  CHECK(cfg.physics.gamma == def.physics.gamma);
  CHECK(cfg.physics.N == def.physics.N);
  CHECK(cfg.numerics.t_points == def.numerics.t_points);
  CHECK(cfg.numerics.first_order_form == def.numerics.first_order_form);
  CHECK(cfg.numerics.rate_normalization == def.numerics.rate_normalization);
  CHECK(cfg.output.dir == def.output.dir);
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "[physics]\n"
      "; comment\n"
      "kappa = 0.5\n"
      "N = 201\n"
      "[numerics]\n"
      "first_order_form = rederived\n"
      "first_order_upper = whole-line\n"
      "rate_normalization = one-minus-ground\n"
      "[output]\n"
      "svg = true\n");
  CHECK(cfg.physics.kappa == 0.5);
  CHECK(cfg.physics.N == 201);
  CHECK(cfg.physics.gamma == 0.0125);
  CHECK(cfg.numerics.first_order_form == first_order::KernelForm::Rederived);
  CHECK(cfg.numerics.first_order_upper == first_order::UpperLimit::WholeLine);
  CHECK(cfg.numerics.rate_normalization == ww::RateNormalization::OneMinusGround);
  CHECK(cfg.output.svg);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("unknown keys and bad values name the line") {
  try {
    parse_config("[physics]\ngamma = 0.01\n\nkapa = 0.3\n");
    FAIL("accepted an unknown key");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "physics.kapa");
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse_config("[numerics]\nt_points = many\n");
    FAIL("accepted a bad integer");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "numerics.t_points");
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_config("[plot]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[numerics]\nfirst_order_form = nope\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/photonkin.ini"), ConfigError);
}

TEST_CASE("validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.physics.N = 160;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.physics.lambda = 20.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.numerics.k_max = -5.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("overrides") {
  RunConfig cfg;
  apply_override(cfg, "physics.lambda=-35");
  apply_override(cfg, "output.dir=elsewhere");
  CHECK(cfg.physics.lambda == -35.0);
  CHECK(cfg.output.dir == "elsewhere");
  CHECK_THROWS_AS(apply_override(cfg, "physics.lambda"), ConfigError);
  CHECK_THROWS_AS(apply_override(cfg, "physics.nope=1"), ConfigError);
  CHECK_THROWS_AS(apply_override(cfg, "physics.gamma=abc"), ConfigError);
}

TEST_CASE("CSV formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-2.5e-9) == "-2.5e-09");
  CHECK(format_number(NAN) == "nan");
  const std::vector<Column> cols{{"t", {0.0, 0.5}}, {"p", {1.0, 2.0 / 3.0}}};
  const auto text = csv_text(cols);
  CHECK(text == "t,p\n0,1\n0.5,0.666666666667\n");
  CHECK(csv_text(cols) == text);
  CHECK_THROWS(csv_text({{"a", {1.0}}, {"b", {1.0, 2.0}}}));
}

TEST_CASE("SVG output") {
  const std::vector<double> x{0.0, 1.0, 2.0};
  const auto svg = svg_text({"demo", "t", "P", false}, x, {{"a", {0.1, 0.5, 0.2}, false}, {"b", {0.3, 0.3, 0.3}, true}});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  const auto logy = svg_text({"log", "w", "S", true}, x, {{"s", {1e-3, 1.0, 1e2}, false}});
  CHECK(logy.find("</svg>") != std::string::npos);
}

TEST_CASE("semiclassical scenario writes its files deterministically") {
  const auto dir = std::filesystem::temp_directory_path() / "photonkin_test_app";
  std::filesystem::remove_all(dir);
  RunConfig cfg;
  cfg.scenario = "semiclassical-table";
  cfg.output.dir = dir.string();
  const auto m1 = run(cfg);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  const auto first = slurp(dir / "semiclassical_shifts.csv");
  CHECK(first.find("inconsistent") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "semiclassical_table_summary.txt"));
  const auto m2 = run(cfg);
  CHECK(slurp(dir / "semiclassical_shifts.csv") == first);
  CHECK(m1.files == m2.files);
  cfg.scenario = "nope";
  CHECK_THROWS(run(cfg));
}
