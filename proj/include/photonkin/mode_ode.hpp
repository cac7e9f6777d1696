// Single-excitation truncation on a finite set of cavity modes: the atom
// amplitude A (excited, vacuum) and photon amplitudes B_mu (ground, one
// photon in mode mu), in the interaction picture
//
//   A'    = -g sum_mu B_mu e^{ i Delta_mu t}
//   B_mu' =  g A        e^{-i Delta_mu t},   Delta_mu = 1 - |k_mu|.
//
// Exact within the truncation; it conserves |A|^2 + sum |B_mu|^2.

#pragma once

#include <cstddef>
#include <vector>

#include "photonkin/grid.hpp"
#include "photonkin/ode.hpp"
#include "photonkin/packet.hpp"

namespace photonkin::mode_ode {

struct ModeSystem {
  double L = 0.0;
  double gamma = 0.0;
  double g = 0.0;                   // sqrt(gamma / L)
  std::vector<double> k;            // 2 pi n / L, n = -(N-1)/2 .. (N-1)/2
  std::vector<double> detuning;     // 1 - |k|

  std::size_t modes() const noexcept { return k.size(); }
  /// Time after which light leaving the atom re-enters it through the
  /// periodic boundary.
  double recurrence_time() const noexcept { return L; }
};

/// N must be odd and >= 3; L and gamma positive.
ModeSystem build_mode_system(double L, std::size_t n_modes, double gamma);

struct ModeState {
  cplx A = 0.0;
  std::vector<cplx> B;
  double t = 0.0;

  double norm() const;  // |A|^2 + sum |B|^2
};

struct ModeTrajectory {
  std::vector<ModeState> states;
  std::vector<double> p_plus() const;
  std::vector<double> times() const;
  double max_norm_drift() const;  // max |norm(t) - norm(0)|
};

/// rel 1e-10, abs 1e-13.
OdeOptions mode_options();

/// Integrate on the grid's sample times; the initial state sits at t_start.
ModeTrajectory integrate_modes(const ModeSystem& sys, const ModeState& initial,
                               const TimeGrid& grid, OdeOptions opt = mode_options());

/// Excited atom, empty field.
ModeState excited_vacuum(const ModeSystem& sys);

struct DecayFit {
  double rate = 0.0;       // fitted probability rate (ideally 2 gamma)
  double intercept = 0.0;  // ln |A|^2 at t = 0
  std::size_t samples = 0;
};

/// Least-squares fit of ln |A|^2 against t over [t_lo, t_hi].
DecayFit fit_decay_rate(const ModeTrajectory& tr, double t_lo, double t_hi);

/// Ground-state atom with the photon in the discrete packet
/// phi_mu = (2 pi)^{1/4}/sqrt(kappa L) xi(k_mu); the amplitudes are
/// renormalised to unit total probability and the discarded mass recorded.
struct PacketInitialState {
  ModeState state;
  double raw_norm = 0.0;        // sum |phi_mu|^2 before renormalisation
  double discarded_mass = 0.0;  // 1 - raw_norm
};

PacketInitialState packet_on_ground_state(const ModeSystem& sys, const PacketSpec& packet);

struct ScatterResult {
  ModeTrajectory trajectory;
  KineticsTrace trace;          // p_plus = |A|^2, p_minus = 1 - p_plus
  double discarded_mass = 0.0;
  double peak_time = 0.0;
  double peak_p_plus = 0.0;
  /// P+ fitted to p e^{-2 gamma (t - t_peak)} on [t_peak + 4/kappa, t_fit_end];
  /// equals the excitation "at the peak" the decay tail points back to.
  double fitted_p_plus = 0.0;
  /// The same fitted exponential extrapolated back to the arrival time.
  double p_plus_at_arrival = 0.0;
  double fit_t_lo = 0.0;
  double fit_t_hi = 0.0;
};

/// Requires grid.t_end() <= L - |lambda| (no recurrence inside the window).
ScatterResult scatter_on_ground_state(const ModeSystem& sys, const PacketSpec& packet,
                                      const TimeGrid& grid, double t_fit_end = 150.0);

}  // namespace photonkin::mode_ode
