#include "photonkin/mode_ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "photonkin/errors.hpp"
#include "photonkin/units.hpp"

namespace photonkin::mode_ode {

ModeSystem build_mode_system(double L, std::size_t n_modes, double gamma) {
  if (!(L > 0.0)) throw InvalidArgument("build_mode_system: L must be positive");
  if (!(gamma > 0.0)) throw InvalidArgument("build_mode_system: gamma must be positive");
  if (n_modes < 3 || n_modes % 2 == 0) {
    throw InvalidArgument("build_mode_system: N must be odd and >= 3");
  }
  ModeSystem s;
  s.L = L;
  s.gamma = gamma;
  s.g = std::sqrt(gamma / L);
  const long half = static_cast<long>(n_modes / 2);
  s.k.reserve(n_modes);
  s.detuning.reserve(n_modes);
  for (long n = -half; n <= half; ++n) {
    const double k = 2.0 * pi * static_cast<double>(n) / L;
    s.k.push_back(k);
    s.detuning.push_back(1.0 - std::abs(k));
  }
  return s;
}

double ModeState::norm() const {
  double s = std::norm(A);
  for (const auto& b : B) s += std::norm(b);
  return s;
}

std::vector<double> ModeTrajectory::p_plus() const {
  std::vector<double> p;
  p.reserve(states.size());
  for (const auto& s : states) p.push_back(std::norm(s.A));
  return p;
}

std::vector<double> ModeTrajectory::times() const {
  std::vector<double> t;
  t.reserve(states.size());
  for (const auto& s : states) t.push_back(s.t);
  return t;
}

double ModeTrajectory::max_norm_drift() const {
  if (states.empty()) return 0.0;
  const double n0 = states.front().norm();
  double d = 0.0;
  for (const auto& s : states) d = std::max(d, std::abs(s.norm() - n0));
  return d;
}

OdeOptions mode_options() {
  OdeOptions o;
  o.rel_tol = 1e-10;
  o.abs_tol = 1e-13;
  o.initial_step = 1e-2;
  return o;
}

ModeTrajectory integrate_modes(const ModeSystem& sys, const ModeState& initial,
                               const TimeGrid& grid, OdeOptions opt) {
  const std::size_t n = sys.modes();
  if (initial.B.size() != n) {
    throw InvalidArgument("integrate_modes: initial state has " +
                          std::to_string(initial.B.size()) + " modes, system has " +
                          std::to_string(n));
  }
  using State = std::vector<cplx>;
  State x0(n + 1);
  x0[0] = initial.A;
  std::copy(initial.B.begin(), initial.B.end(), x0.begin() + 1);

  std::vector<cplx> phase(n);
  auto rhs = [&](const State& x, State& dx, double t) {
    for (std::size_t m = 0; m < n; ++m) phase[m] = std::polar(1.0, sys.detuning[m] * t);
    cplx acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) acc += x[m + 1] * phase[m];
    dx[0] = -sys.g * acc;
    const cplx ga = sys.g * x[0];
    for (std::size_t m = 0; m < n; ++m) dx[m + 1] = ga * std::conj(phase[m]);
  };

  const auto times = grid.samples();
  const auto raw = integrate_at(rhs, x0, times, opt, "mode-ode");
  ModeTrajectory tr;
  tr.states.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    ModeState s;
    s.A = raw[i][0];
    s.B.assign(raw[i].begin() + 1, raw[i].end());
    s.t = times[i];
    tr.states.push_back(std::move(s));
  }
  return tr;
}

ModeState excited_vacuum(const ModeSystem& sys) {
  ModeState s;
  s.A = 1.0;
  s.B.assign(sys.modes(), 0.0);
  return s;
}

DecayFit fit_decay_rate(const ModeTrajectory& tr, double t_lo, double t_hi) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (const auto& s : tr.states) {
    if (s.t < t_lo || s.t > t_hi) continue;
    const double p = std::norm(s.A);
    if (!(p > 0.0)) continue;
    const double y = std::log(p);
    sx += s.t;
    sy += y;
    sxx += s.t * s.t;
    sxy += s.t * y;
    ++m;
  }
  if (m < 2) throw InvalidArgument("fit_decay_rate: fewer than two samples in window");
  const double md = static_cast<double>(m);
  const double det = md * sxx - sx * sx;
  if (!(det > 0.0)) throw InvalidArgument("fit_decay_rate: degenerate window");
  const double slope = (md * sxy - sx * sy) / det;
  DecayFit f;
  f.rate = -slope;
  f.intercept = (sy - slope * sx) / md;
  f.samples = m;
  return f;
}

PacketInitialState packet_on_ground_state(const ModeSystem& sys, const PacketSpec& packet) {
  PacketInitialState init;
  init.state.A = 0.0;
  init.state.B.resize(sys.modes());
  double raw = 0.0;
  for (std::size_t m = 0; m < sys.modes(); ++m) {
    init.state.B[m] = discrete_amplitude(sys.k[m], packet, sys.L);
    raw += std::norm(init.state.B[m]);
  }
  if (!(raw > 0.0)) throw InvalidArgument("packet_on_ground_state: packet misses all modes");
  init.raw_norm = raw;
  init.discarded_mass = 1.0 - raw;
  const double s = 1.0 / std::sqrt(raw);
  for (auto& b : init.state.B) b *= s;
  return init;
}

ScatterResult scatter_on_ground_state(const ModeSystem& sys, const PacketSpec& packet,
                                      const TimeGrid& grid, double t_fit_end) {
  const double window = sys.L - std::abs(packet.lambda());
  if (grid.t_end() > window) {
    throw InvalidArgument("scatter_on_ground_state: t_end " + std::to_string(grid.t_end()) +
                          " exceeds the recurrence-free window L - |lambda| = " +
                          std::to_string(window));
  }
  auto init = packet_on_ground_state(sys, packet);
  init.state.t = grid.t_start();

  ScatterResult r;
  r.discarded_mass = init.discarded_mass;
  r.trajectory = integrate_modes(sys, init.state, grid);

  auto& tr = r.trace;
  tr.times = r.trajectory.times();
  tr.p_plus = r.trajectory.p_plus();
  tr.p_minus.reserve(tr.p_plus.size());
  for (double p : tr.p_plus) tr.p_minus.push_back(1.0 - p);
  tr.p_plus_definition = "|A|^2";

  const auto it = std::max_element(tr.p_plus.begin(), tr.p_plus.end());
  const auto ip = static_cast<std::size_t>(it - tr.p_plus.begin());
  r.peak_time = tr.times[ip];
  r.peak_p_plus = *it;

  // Fixed-rate fit of the decay tail, referenced to the peak.
  const double rate = 2.0 * sys.gamma;
  r.fit_t_lo = r.peak_time + 4.0 / packet.kappa();
  r.fit_t_hi = std::min(t_fit_end, grid.t_end());
  double acc = 0.0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (tr.times[i] < r.fit_t_lo || tr.times[i] > r.fit_t_hi) continue;
    if (!(tr.p_plus[i] > 0.0)) continue;
    acc += std::log(tr.p_plus[i]) + rate * (tr.times[i] - r.peak_time);
    ++m;
  }
  if (m == 0) {
    throw InvalidArgument("scatter_on_ground_state: empty decay-fit window [" +
                          std::to_string(r.fit_t_lo) + ", " + std::to_string(r.fit_t_hi) + "]");
  }
  r.fitted_p_plus = std::exp(acc / static_cast<double>(m));
  r.p_plus_at_arrival =
      r.fitted_p_plus * std::exp(rate * (r.peak_time - packet.arrival_time()));
  return r;
}

}  // namespace photonkin::mode_ode
