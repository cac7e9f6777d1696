#include "photonkin/semiclassical.hpp"

#include <array>
#include <cmath>

#include "photonkin/errors.hpp"
#include "photonkin/units.hpp"

namespace photonkin::semiclassical {

namespace {

using Vec3 = std::array<double, 3>;

BlochTrajectory to_trajectory(const std::vector<double>& times,
                              const std::vector<Vec3>& raw) {
  BlochTrajectory tr;
  tr.times = times;
  tr.states.reserve(raw.size());
  for (const auto& s : raw) tr.states.push_back({s[0], s[1], s[2]});
  return tr;
}

}  // namespace

BlochParams BlochParams::spontaneous(double gamma) {
  if (!(gamma >= 0.0)) throw InvalidArgument("BlochParams: gamma must be >= 0");
  return {2.0 * gamma, gamma, 0.0, -1.0};
}

void BlochParams::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0)) {
    throw InvalidArgument("BlochParams: relaxation rates must be >= 0");
  }
  if (!std::isfinite(detuning) || !std::isfinite(w_eq)) {
    throw InvalidArgument("BlochParams: detuning and w_eq must be finite");
  }
}

void PulseSpec::validate() const {
  if (!(tau > 0.0)) throw InvalidArgument("PulseSpec: tau must be positive");
  if (!(omega0_rabi >= 0.0)) throw InvalidArgument("PulseSpec: omega0_rabi must be >= 0");
}

PulseSpec PulseSpec::one_photon_1d(double gamma, const PacketSpec& packet) {
  const double delta = packet.spectral_width();
  PulseSpec p;
  p.omega0_rabi = std::sqrt(std::sqrt(2.0 / pi) * gamma * delta);
  p.tau = 1.0 / delta;
  p.t_arrival = packet.arrival_time();
  return p;
}

double rabi_envelope(double t, const PulseSpec& pulse) {
  const double d = t - pulse.t_arrival;
  return pulse.omega0_rabi * std::exp(-d * d / (4.0 * pulse.tau * pulse.tau));
}

double pulse_area(const PulseSpec& pulse) {
  return 2.0 * std::sqrt(pi) * pulse.omega0_rabi * pulse.tau;
}

BlochTrajectory integrate_bloch(const BlochParams& params,
                                const std::function<double(double)>& rabi,
                                const BlochState& initial, const TimeGrid& grid,
                                const OdeOptions& opt) {
  params.validate();
  const auto times = grid.samples();
  auto rhs = [&](const Vec3& x, Vec3& dx, double t) {
    const double om = rabi(t);
    dx[0] = -params.gamma2 * x[0] - params.detuning * x[1];
    dx[1] = -params.gamma2 * x[1] + params.detuning * x[0] + om * x[2];
    dx[2] = -params.gamma1 * (x[2] - params.w_eq) - om * x[1];
  };
  const Vec3 x0{initial.u, initial.v, initial.w};
  return to_trajectory(times, integrate_at(rhs, x0, times, opt, "semiclassical"));
}

BlochTrajectory integrate_bloch(const BlochParams& params, const PulseSpec& pulse,
                                const BlochState& initial, const TimeGrid& grid,
                                const OdeOptions& opt) {
  pulse.validate();
  return integrate_bloch(
      params, [&pulse](double t) { return rabi_envelope(t, pulse); }, initial, grid, opt);
}

double free_decay_w(double t, double w0, const BlochParams& params) {
  return params.w_eq + (w0 - params.w_eq) * std::exp(-params.gamma1 * t);
}

ImpulsiveShift induced_shift_impulsive(double w_T, const PulseSpec& pulse) {
  pulse.validate();
  const double area = pulse_area(pulse);
  const double x = pulse.omega0_rabi * pulse.tau;
  ImpulsiveShift s;
  s.from_pulse_area = 0.5 * (-0.5 * w_T * area * area);
  s.closed_form = -0.5 * pi * x * x * w_T;
  return s;
}

double induced_shift_1d(double w_T, double gamma, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("induced_shift_1d: delta must be positive");
  return -std::sqrt(2.0 * pi) * (gamma / delta) * w_T;
}

double induced_shift_3d(double w_T, double sigma_ratio, double rate_ratio) {
  if (!(sigma_ratio > 0.0) || !(rate_ratio > 0.0)) {
    throw InvalidArgument("induced_shift_3d: ratios must be positive");
  }
  return -std::sqrt(pi / 8.0) * sigma_ratio * rate_ratio * w_T;
}

double induced_shift_ode(const BlochParams& params, const PulseSpec& pulse, double w0,
                         double tail_taus) {
  params.validate();
  pulse.validate();
  // Dimensionless time s = t / tau. State is (u, v, dw) with
  // w = w_free(t) + dw, so the tiny pulse-induced change is integrated
  // directly instead of as a difference of two O(1) numbers.
  const double tau = pulse.tau;
  const double g1 = params.gamma1 * tau;
  const double g2 = params.gamma2 * tau;
  const double det = params.detuning * tau;
  const double om0 = pulse.omega0_rabi * tau;
  const double arrival = pulse.t_arrival / tau;
  const double s_end = arrival + tail_taus;
  if (!(arrival > 0.0)) {
    throw InvalidArgument("induced_shift_ode: pulse must arrive after t = 0");
  }

  auto w_free = [&](double s) { return params.w_eq + (w0 - params.w_eq) * std::exp(-g1 * s); };
  auto rhs = [&](const Vec3& x, Vec3& dx, double s) {
    const double d = s - arrival;
    const double om = om0 * std::exp(-0.25 * d * d);
    dx[0] = -g2 * x[0] - det * x[1];
    dx[1] = -g2 * x[1] + det * x[0] + om * (w_free(s) + x[2]);
    dx[2] = -g1 * x[2] - om * x[1];
  };
  OdeOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-14 * std::max(om0 * om0, 1e-30);
  opt.initial_step = 1e-3;
  const std::array<double, 2> times{0.0, s_end};
  const auto states = integrate_at(rhs, Vec3{0.0, 0.0, 0.0}, times, opt, "semiclassical");
  const double dw = states.back()[2];
  return 0.5 * dw * std::exp(g1 * (s_end - arrival));
}

PhysicalExample PhysicalExample::reference() {
  return {3.54e15, 2.42e-18, 1e-9, 5e-3};
}

void PhysicalExample::validate() const {
  if (!(omega0_cgs > 0.0) || !(dipole_cgs > 0.0) || !(tau_s > 0.0) || !(area_cm2 > 0.0)) {
    throw InvalidArgument("PhysicalExample: all fields must be positive");
  }
}

CgsReport cgs_report(const PhysicalExample& ex) {
  ex.validate();
  using namespace cgs;
  CgsReport r;
  const double d2 = ex.dipole_cgs * ex.dipole_cgs;
  const double w3 = ex.omega0_cgs * ex.omega0_cgs * ex.omega0_cgs;
  r.gamma1 = 4.0 * d2 * w3 / (3.0 * hbar * c * c * c);
  r.gamma = 0.5 * r.gamma1;
  r.pulse_length = c * ex.tau_s;
  r.field_amplitude = std::pow(8.0 * pi, 0.25) *
                      std::sqrt(hbar * ex.omega0_cgs / (r.pulse_length * ex.area_cm2));
  r.rabi_peak = ex.dipole_cgs * r.field_amplitude / hbar;
  r.wavelength = 2.0 * pi * c / ex.omega0_cgs;
  r.cross_section = 3.0 / (2.0 * pi) * r.wavelength * r.wavelength;
  r.spectral_width = 1.0 / ex.tau_s;

  PulseSpec pulse{r.rabi_peak, ex.tau_s, 10.0 * ex.tau_s};
  const auto imp = induced_shift_impulsive(1.0, pulse);
  r.shift_pulse_area = std::abs(imp.from_pulse_area);
  r.shift_closed_form = std::abs(imp.closed_form);
  r.shift_cross_section = std::abs(induced_shift_3d(
      1.0, r.cross_section / ex.area_cm2, r.gamma / r.spectral_width));
  // Ground-state atom (w = -1 throughout) isolates |w_T| = 1 exactly.
  r.shift_ode = std::abs(
      induced_shift_ode(BlochParams::spontaneous(r.gamma), pulse, -1.0));
  return r;
}

std::vector<ShiftRow> shift_comparison(const CgsReport& r, double area_cm2, double quoted) {
  auto row = [quoted](std::string route, double v) {
    ShiftRow s{std::move(route), v, quoted / v, false};
    s.inconsistent = s.ratio_to_quoted < 0.9 || s.ratio_to_quoted > 1.1;
    return s;
  };
  std::vector<ShiftRow> rows;
  rows.push_back(row("pulse-area (Delta w = -(w/2)(int Omega)^2)", r.shift_pulse_area));
  rows.push_back(row("closed form -(pi/2)(d E0 l/hbar c)^2", r.shift_closed_form));
  rows.push_back(row("cross-section form, derived gamma and sigma0", r.shift_cross_section));
  rows.push_back(row("cross-section form, quoted sigma0=1.35e-9 gamma=6.70e6 delta=1e9",
                     std::abs(induced_shift_3d(1.0, 1.35e-9 / area_cm2, 6.70e6 / 1e9))));
  rows.push_back(row("Bloch ODE oracle", r.shift_ode));
  return rows;
}

}  // namespace photonkin::semiclassical
