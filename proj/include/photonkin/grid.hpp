#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "photonkin/packet.hpp"
#include "photonkin/quadrature.hpp"

namespace photonkin {

/// Uniform time samples t_start, ..., t_end (n_points >= 2, t_start >= 0).
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, std::size_t n_points);

  /// [0, 400] with 4001 points: ten probability e-foldings at gamma = 0.0125.
  static TimeGrid standard() { return {0.0, 400.0, 4001}; }

  double t_start() const noexcept { return t_start_; }
  double t_end() const noexcept { return t_end_; }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept {
    return (t_end_ - t_start_) / static_cast<double>(n_ - 1);
  }
  double at(std::size_t i) const;
  std::vector<double> samples() const;

 private:
  double t_start_;
  double t_end_;
  std::size_t n_;
};

/// Wavenumber-space quadrature settings. Panels of width `panel_width` are
/// forced inside |k -+ 1| < resonance_halfwidth where the Lorentzian lines sit.
struct QuadratureConfig {
  double k_min = -4.0;
  double k_max = 4.0;
  double rel_tol = 1e-6;
  double abs_tol = 1e-13;
  double resonance_halfwidth = 0.625;  // 50 gamma at gamma = 0.0125
  double panel_width = 0.003125;       // gamma / 4
  std::size_t max_panels = 400000;

  /// Domain [-4, 4], forced panels of width gamma/4 within 50 gamma of |k| = 1.
  static QuadratureConfig for_model(const AtomSpec& atom, const PacketSpec& packet);

  /// Throws InvalidArgument when the config is unusable.
  void validate() const;
  /// True when [k_min, k_max] extends 8 max(gamma, kappa) past both |k| = 1.
  bool covers_tails(double gamma, double kappa) const;

  std::vector<double> breakpoints() const;
  QuadOptions options() const;
};

/// Time series of atomic level probabilities from any solver route.
struct KineticsTrace {
  std::vector<double> times;
  std::vector<double> p_minus;
  std::vector<double> p_plus;
  /// Downward-transition rate samples; empty when not computed.
  std::vector<double> gamma_of_t;
  /// How p_plus was obtained (e.g. "1 - P-" or "|A|^2").
  std::string p_plus_definition;
  /// Quadrature or integrator error estimate per sample (may be empty).
  std::vector<double> error_estimate;

  std::size_t size() const noexcept { return times.size(); }
};

}  // namespace photonkin
