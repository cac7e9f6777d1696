// Frequency spectrum of the two emitted photons after the interaction
// (t -> infinity, chi at its limit 1/(gamma + i(1 - |z|))):
//
//   S(w) = int_0^inf [C(w, w') + C(-w, w') + C(w, -w') + C(-w, -w')] dw',
//
// compared with the basic spectrum, a unit Gaussian of width delta plus a unit
// Lorentzian of half-width gamma, both centred at 1:
//   S0(w) = e^{-(w-1)^2/(2 delta^2)} / (sqrt(2 pi) delta) + (gamma/pi) / (gamma^2 + (1-w)^2).

#pragma once

#include <cstddef>
#include <vector>

#include "photonkin/ww_kinetics.hpp"

namespace photonkin::spectrum {

/// Zero for |omega| beyond the model's k domain.
double spectral_density(double omega, const ww::WWModel& model);

double basic_spectrum(double omega, double delta, double gamma);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const noexcept { return hi - lo; }
};

/// Shortest interval holding half of the mass of `density` on the grid,
/// using the trapezoid cumulative mass interpolated linearly between nodes.
/// When expected_total > 0 the grid mass must reach 99.9% of it.
Interval spectral_width(const std::vector<double>& omega, const std::vector<double>& density,
                        double expected_total = 0.0);

/// Step gamma/10 within 30 gamma of omega = 1, growing geometrically (x1.005,
/// capped at 0.002) outside, over [0.05, 3] with both ends included.
std::vector<double> frequency_grid(double gamma, double lo = 0.05, double hi = 3.0);

struct SpectrumReport {
  std::vector<double> omega;
  std::vector<double> s;
  std::vector<double> s0;
  std::vector<double> ratio;  // S / S0
  Interval width_s;
  Interval width_s0;
  double broadening = 0.0;  // (|I_S| - |I_S0|) / |I_S0|
  double mass_s = 0.0;      // trapezoid mass on the grid
  double mass_s0 = 0.0;
};

/// The grid must be sorted and resolve the Lorentzian: spacing <= gamma/5
/// within 20 gamma of omega = 1.
SpectrumReport spectrum_report(const ww::WWModel& model, const std::vector<double>& omega);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace photonkin::spectrum
