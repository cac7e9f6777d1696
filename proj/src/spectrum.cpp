#include "photonkin/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "photonkin/errors.hpp"
#include "photonkin/quadrature.hpp"
#include "photonkin/units.hpp"

namespace photonkin::spectrum {

double spectral_density(double omega, const ww::WWModel& model) {
  const double inf = std::numeric_limits<double>::infinity();
  const double hi = std::min(model.quad.k_max, -model.quad.k_min);
  if (!(hi > 0.0)) throw InvalidArgument("spectral_density: domain must straddle 0");
  // photons outside the k domain are not part of the model
  if (std::abs(omega) > hi) return 0.0;
  const std::array<double, 1> centre{1.0};
  auto pts = resonance_breakpoints(0.0, hi, centre, model.quad.resonance_halfwidth,
                                   model.quad.panel_width);
  if (omega > 0.0 && omega < hi) pts.push_back(omega);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto f = [&](double w) {
    return ww::density_C(omega, w, inf, model) + ww::density_C(-omega, w, inf, model) +
           ww::density_C(omega, -w, inf, model) + ww::density_C(-omega, -w, inf, model);
  };
  QuadOptions opt = model.quad.options();
  opt.throw_on_failure = false;
  const auto r = integrate(f, std::span<const double>(pts), opt);
  if (!r.converged) {
    throw SolverError("spectrum", "S(" + std::to_string(omega) +
                                      ") quadrature did not converge, error " +
                                      std::to_string(r.error));
  }
  return r.value;
}

double basic_spectrum(double omega, double delta, double gamma) {
  if (!(delta > 0.0) || !(gamma > 0.0)) {
    throw InvalidArgument("basic_spectrum: delta and gamma must be positive");
  }
  const double d = 1.0 - omega;
  const double gau = std::exp(-d * d / (2.0 * delta * delta)) / (std::sqrt(2.0 * pi) * delta);
  const double lor = gamma / (pi * (gamma * gamma + d * d));
  return gau + lor;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidArgument("trapezoid: size mismatch");
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

Interval spectral_width(const std::vector<double>& omega, const std::vector<double>& density,
                        double expected_total) {
  const std::size_t n = omega.size();
  if (n < 2 || density.size() != n) {
    throw InvalidArgument("spectral_width: need >= 2 matching samples");
  }
  std::vector<double> cum(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    if (!(omega[i] > omega[i - 1])) throw InvalidArgument("spectral_width: grid not increasing");
    cum[i] = cum[i - 1] + 0.5 * (omega[i] - omega[i - 1]) * (density[i] + density[i - 1]);
  }
  const double total = cum.back();
  if (!(total > 0.0)) throw InvalidArgument("spectral_width: zero mass");
  if (expected_total > 0.0 && total < 0.999 * expected_total) {
    throw InvalidArgument("spectral_width: grid holds only " + std::to_string(total / expected_total) +
                          " of the expected mass");
  }
  const double half = 0.5 * total;

  // Inverse of the piecewise-linear cumulative mass.
  auto locate = [&](double m) {
    auto it = std::lower_bound(cum.begin(), cum.end(), m);
    if (it == cum.begin()) return omega.front();
    if (it == cum.end()) return omega.back();
    const auto j = static_cast<std::size_t>(it - cum.begin());
    const double dm = cum[j] - cum[j - 1];
    if (dm <= 0.0) return omega[j];
    return omega[j - 1] + (m - cum[j - 1]) / dm * (omega[j] - omega[j - 1]);
  };

  // Candidate intervals start at each node, and end at each node.
  Interval best{omega.front(), omega.back()};
  for (std::size_t i = 0; i < n; ++i) {
    if (cum[i] + half <= total) {
      const Interval c{omega[i], locate(cum[i] + half)};
      if (c.length() < best.length()) best = c;
    }
    if (cum[i] >= half) {
      const Interval c{locate(cum[i] - half), omega[i]};
      if (c.length() < best.length()) best = c;
    }
  }
  return best;
}

std::vector<double> frequency_grid(double gamma, double lo, double hi) {
  if (!(gamma > 0.0) || !(hi > lo) || !(lo >= 0.0)) {
    throw InvalidArgument("frequency_grid: need gamma > 0 and 0 <= lo < hi");
  }
  const double h0 = gamma / 10.0;
  const double core = 30.0 * gamma;
  const double h_max = std::max(0.002, h0);
  std::vector<double> right;
  for (double w = 1.0, h = h0; w <= hi;) {
    right.push_back(w);
    if (w - 1.0 >= core) h = std::min(h * 1.005, h_max);
    w += h;
  }
  std::vector<double> left;
  for (double w = 1.0 - h0, h = h0; w >= lo;) {
    left.push_back(w);
    if (1.0 - w >= core) h = std::min(h * 1.005, h_max);
    w -= h;
  }
  std::vector<double> g(left.rbegin(), left.rend());
  g.insert(g.end(), right.begin(), right.end());
  if (g.front() > lo) g.insert(g.begin(), lo);
  if (g.back() < hi) g.push_back(hi);
  return g;
}

SpectrumReport spectrum_report(const ww::WWModel& model, const std::vector<double>& omega) {
  const double gamma = model.atom.gamma();
  for (std::size_t i = 1; i < omega.size(); ++i) {
    if (!(omega[i] > omega[i - 1])) throw InvalidArgument("spectrum_report: grid not increasing");
    const double mid = 0.5 * (omega[i] + omega[i - 1]);
    if (std::abs(mid - 1.0) < 20.0 * gamma && omega[i] - omega[i - 1] > gamma / 5.0 + 1e-15) {
      throw InvalidArgument("spectrum_report: grid spacing exceeds gamma/5 near omega = 1");
    }
  }
  SpectrumReport r;
  r.omega = omega;
  r.s.reserve(omega.size());
  r.s0.reserve(omega.size());
  r.ratio.reserve(omega.size());
  const double delta = model.packet.spectral_width();
  for (double w : omega) {
    const double s = spectral_density(w, model);
    const double s0 = basic_spectrum(w, delta, gamma);
    r.s.push_back(s);
    r.s0.push_back(s0);
    r.ratio.push_back(s / s0);
  }
  r.mass_s = trapezoid(r.omega, r.s);
  r.mass_s0 = trapezoid(r.omega, r.s0);
  r.width_s = spectral_width(r.omega, r.s);
  r.width_s0 = spectral_width(r.omega, r.s0);
  r.broadening = (r.width_s.length() - r.width_s0.length()) / r.width_s0.length();
  return r;
}

}  // namespace photonkin::spectrum
