// Zeroth-order Weisskopf-Wigner solution for an excited atom hit by a
// single-photon packet (1D, one polarisation).
//
// Under the ansatz a_mu(t) = phi_mu exp(-gamma t) the two-photon amplitudes
// are closed form, and their k-space density
//
//   C(k1, k2; t) = (1/sqrt(8 pi^3)) (gamma/kappa)
//                  |xi(k1) chi(k2, t) + xi(k2) chi(k1, t)|^2
//
// yields the ground-state probability P-(t) = (1/2) int int C dk1 dk2.
// P+ is taken as 1 - P- (the ansatz itself keeps sum |a_mu|^2 = e^{-2 gamma t},
// which does not add up with P- once the packet has arrived).

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "photonkin/grid.hpp"
#include "photonkin/packet.hpp"
#include "photonkin/quadrature.hpp"

namespace photonkin::ww {

/// Time used for asymptotic (t -> infinity) quantities: ten probability
/// e-foldings at gamma = 0.0125.
inline constexpr double kAsymptoticTime = 400.0;

struct WWModel {
  AtomSpec atom;
  PacketSpec packet;
  QuadratureConfig quad;

  WWModel(AtomSpec atom, PacketSpec packet);
  WWModel(AtomSpec atom, PacketSpec packet, QuadratureConfig quad);

  /// Same atom and numerics, packet launched from `lambda`.
  WWModel with_displacement(double lambda) const;
  double prefactor() const;  // (1/sqrt(8 pi^3)) gamma / kappa
};

/// [1 - exp(-gamma t - i(1-|z|) t)] / [gamma + i(1-|z|)]; t = +inf gives the limit.
cplx chi(double z, double t, double gamma);

/// exp[-(z-1)^2/(4 kappa^2) - i z lambda].
cplx xi(double z, const PacketSpec& packet);

double density_C(double k1, double k2, double t, const WWModel& model);

/// Callable view of C(k1, k2; t) for a fixed model.
class TwoPhotonDensity {
 public:
  explicit TwoPhotonDensity(WWModel model) : model_(std::move(model)) {}
  double operator()(double k1, double k2, double t) const {
    return density_C(k1, k2, t, model_);
  }
  const WWModel& model() const noexcept { return model_; }

 private:
  WWModel model_;
};

struct Probability {
  double value = 0.0;
  double error = 0.0;     // quadrature error estimate
  std::size_t nodes = 0;  // 1D nodes of the tensor rule
};

/// 1D rule adapted to |xi|^2, |chi(., t)|^2 and xi chi* on the model's domain,
/// with forced panels around |k| = 1. Its tensor square is the 2D rule.
QuadRule ground_rule(double t, const WWModel& model);

/// P-(t) from the tensor-product rule, summed through the exact identity
///   sum_ij w_i w_j |xi_i chi_j + xi_j chi_i|^2
///     = 2 (sum w |xi|^2)(sum w |chi|^2) + 2 |sum w xi conj(chi)|^2.
Probability prob_ground(double t, const WWModel& model);

/// Same tensor-product rule, summed term by term (O(N^2)). Slow; used to
/// check the factorised sum.
double prob_ground_direct(double t, const WWModel& model);

enum class RateNormalization {
  /// Gamma = -(dP+/dt) / P+ with P+ = 1 - P-.
  OneMinusGround,
  /// Gamma = (dP-/dt) / sum|a_mu|^2 with the ansatz population e^{-2 gamma t}.
  AnsatzPopulation,
};

struct RateOptions {
  RateNormalization normalization = RateNormalization::AnsatzPopulation;
  double gamma = 0.0;      // needed for AnsatzPopulation
  double epsilon = 1e-6;   // denominators below this end the valid window
};

struct DecayRate {
  std::vector<double> times;
  std::vector<double> rate;  // NaN past the valid window
  std::size_t valid = 0;     // samples [0, valid) are usable
  bool truncated = false;
};

/// Central differences on the trace grid (one-sided second order at the ends).
DecayRate decay_rate(const KineticsTrace& trace, const RateOptions& opt);

struct RatePeak {
  double time = 0.0;
  double rate = 0.0;
};

/// Largest rate within [t_lo, t_hi], refined by a parabola through the
/// three samples around the discrete maximum.
RatePeak rate_peak(const DecayRate& rate, double t_lo, double t_hi);

/// P- on the grid, p_plus = 1 - p_minus, gamma_of_t per `rate`
/// (rate.gamma is filled from the model when left at 0).
KineticsTrace kinetics_trace(const WWModel& model, const TimeGrid& grid,
                             RateOptions rate = {});

struct QuantumShift {
  double closed_form = 0.0;     // -sqrt(2 pi)(gamma/delta) e^{-2 gamma T}
  double numerical = 0.0;       // -(P-_hit(inf) - P-_miss(inf))
  double p_minus_hit = 0.0;
  double p_minus_miss = 0.0;
  double error = 0.0;
};

/// Induced shift for arrival time T. The model's packet must satisfy
/// T = -lambda; the miss reference uses lambda = +T.
QuantumShift induced_shift_quantum(double T, const WWModel& model,
                                   double t_inf = kAsymptoticTime);

/// Modes k_n = 2 pi n / L inside the model's k domain.
std::vector<double> mode_wavenumbers(double L, const WWModel& model);

/// P2 = sum_mu |b_mu(t)|^2, b_mu = sqrt(2) g phi_mu chi_mu(t), g = sqrt(gamma/L).
double doubly_occupied_prob(double L, double t, const WWModel& model);

/// (1/2) sum_{mu != nu} |c_mu nu(t)|^2 over the discrete modes; with
/// include_diagonal the mu = nu terms are kept as well.
double pairs_singly_occupied_prob(double L, double t, const WWModel& model,
                                  bool include_diagonal = false);

}  // namespace photonkin::ww
