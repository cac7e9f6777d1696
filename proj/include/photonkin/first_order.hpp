// First iteration of the amplitude equations: the zeroth-order two-photon
// amplitudes are fed back into the equation for the excited-sector
// amplitudes a(k, t). The b_mu (doubly occupied) contribution is dropped
// since it vanishes as 1/L.
//
//   a(k, t) = phi(k) - (gamma / 2 pi) int_{k_min}^{upper} F(k, y; t) dy
//   P+(t)   = (L / 2 pi) int |a(k, t)|^2 dk
//
// Time enters F through t G(z t) = int_0^t e^{z s} ds, G(z) = (e^z - 1)/z.

#pragma once

#include "photonkin/grid.hpp"
#include "photonkin/packet.hpp"

namespace photonkin::first_order {

/// Which packet amplitude multiplies which brace in F(x, y; t).
enum class KernelForm {
  /// phi(x) on the stimulated brace, phi(y) on the self-decay brace, as
  /// the formula is usually written down.
  AsPrinted,
  /// phi(y) on the stimulated brace and phi(x) on the self-decay brace,
  /// which is what substituting the two-photon amplitudes actually gives.
  Rederived,
  /// As printed, but G[i(1 - |x|) t] instead of G[i(1 - |y|) t] in the
  /// self-decay brace.
  GSymmetrized,
};

enum class UpperLimit {
  AtK,        // int over (k_min, k]
  WholeLine,  // int over (k_min, k_max)
};

struct FirstOrderModel {
  AtomSpec atom;
  PacketSpec packet;
  QuadratureConfig quad;
  double L = 251.32;
  KernelForm form = KernelForm::AsPrinted;
  UpperLimit upper = UpperLimit::AtK;
  /// Scales the correction term; 0 recovers a = phi.
  double coupling_scale = 1.0;

  FirstOrderModel(AtomSpec atom, PacketSpec packet, double L);
  FirstOrderModel with_displacement(double lambda) const;
  void validate() const;
};

/// (e^z - 1)/z with the removable singularity handled by a series for |z| < 1e-4.
cplx g_kernel(cplx z);

cplx f_kernel(double x, double y, double t, const FirstOrderModel& model);

cplx amplitude_first_order(double k, double t, const FirstOrderModel& model);

struct ExcitedProbability {
  double value = 0.0;
  double error = 0.0;
  /// Bound on the Gaussian mass of the packet outside the k domain.
  double truncation_bound = 0.0;
};

ExcitedProbability prob_excited_first_order(double t, const FirstOrderModel& model);

struct FirstOrderShift {
  double T = 0.0;
  double p_plus_hit = 0.0;
  double p_plus_miss = 0.0;
  double shift = 0.0;  // p_plus_hit - p_plus_miss
  double error = 0.0;
};

/// Delta P+(T) = P+(t_eval; lambda = -T) - P+(t_eval; lambda = +T).
FirstOrderShift induced_shift_first_order(double T, const FirstOrderModel& model,
                                          double t_eval);

}  // namespace photonkin::first_order
