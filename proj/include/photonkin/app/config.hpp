#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "photonkin/errors.hpp"
#include "photonkin/first_order.hpp"
#include "photonkin/ww_kinetics.hpp"

namespace photonkin::app {

/// Bad configuration; line is 0 when the problem is not tied to a file line.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field = {}, unsigned long line = 0);
  const std::string& field() const noexcept { return field_; }
  unsigned long line() const noexcept { return line_; }
  /// what() without the line/field prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::string field_;
  unsigned long line_;
};

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "fig1", "fig2", "fig3", "fig4", "fig5", "semiclassical-table", "shift-table",
      "scaling-check"};
  return names;
}

struct PhysicsConfig {
  double gamma = 0.0125;
  double kappa = 0.25;
  double lambda = -20.0;  // hit run; the miss reference uses -lambda
  double L = 251.32;
  std::size_t N = 159;
};

struct NumericsConfig {
  double k_min = -4.0;
  double k_max = 4.0;
  double rel_tol = 1e-6;
  double t_end = 400.0;
  std::size_t t_points = 4001;
  double mode_t_end = 200.0;
  std::size_t mode_t_points = 2001;
  double first_order_t = 400.0;
  double first_order_T_min = 20.0;
  double first_order_T_max = 130.0;
  double first_order_T_step = 10.0;
  first_order::KernelForm first_order_form = first_order::KernelForm::AsPrinted;
  first_order::UpperLimit first_order_upper = first_order::UpperLimit::AtK;
  double first_order_rel_tol = 1e-6;
  ww::RateNormalization rate_normalization = ww::RateNormalization::AnsatzPopulation;
  double omega_min = 0.05;
  double omega_max = 3.0;
};

struct OutputConfig {
  std::string dir = "out";
  bool svg = false;
};

struct RunConfig {
  std::string scenario;
  PhysicsConfig physics;
  NumericsConfig numerics;
  OutputConfig output;

  void validate() const;
};

/// INI text with sections [physics], [numerics], [output]. Unknown sections
/// or keys are rejected.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// "section.key=value".
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Every key with its default, as accepted by parse_config.
std::string default_config_text();

}  // namespace photonkin::app
