#include "photonkin/first_order.hpp"

#include <algorithm>
#include <cmath>

#include "photonkin/complex_math.hpp"
#include "photonkin/errors.hpp"
#include "photonkin/quadrature.hpp"
#include "photonkin/units.hpp"

namespace photonkin::first_order {

namespace {

std::vector<double> clipped_breakpoints(const std::vector<double>& base, double lo,
                                        double hi, std::initializer_list<double> extra) {
  std::vector<double> pts{lo, hi};
  for (double p : base) {
    if (p > lo && p < hi) pts.push_back(p);
  }
  for (double p : extra) {
    if (p > lo && p < hi) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

FirstOrderModel::FirstOrderModel(AtomSpec atom_, PacketSpec packet_, double L_)
    : atom(atom_), packet(packet_), quad(QuadratureConfig::for_model(atom_, packet_)), L(L_) {
  // gamma-wide forced panels for the nested quadrature
  quad.panel_width = atom.gamma();
  quad.rel_tol = 1e-6;
  validate();
}

FirstOrderModel FirstOrderModel::with_displacement(double lambda) const {
  FirstOrderModel m = *this;
  m.packet = packet.displaced(lambda);
  return m;
}

void FirstOrderModel::validate() const {
  if (!(L > 0.0)) throw InvalidArgument("FirstOrderModel: L must be positive");
  quad.validate();
}

cplx g_kernel(cplx z) {
  if (std::abs(z) < 1e-4) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  return expm1(z) / z;
}

cplx f_kernel(double x, double y, double t, const FirstOrderModel& model) {
  const double g = model.atom.gamma();
  const double dx = 1.0 - std::abs(x);
  const double dy = 1.0 - std::abs(y);
  const cplx phi_x = discrete_amplitude(x, model.packet, model.L);
  const cplx phi_y = discrete_amplitude(y, model.packet, model.L);
  const cplx i(0.0, 1.0);

  const cplx common = t * g_kernel(i * dy * t);
  const cplx stimulated = common - t * g_kernel(cplx(-g, std::abs(x) - std::abs(y)) * t);
  const cplx self = (model.form == KernelForm::GSymmetrized ? t * g_kernel(i * dx * t) : common) -
                    t * g_kernel(cplx(-g * t, 0.0));
  const cplx lor_x = 1.0 / cplx(g, dx);
  const cplx lor_y = 1.0 / cplx(g, dy);

  if (model.form != KernelForm::Rederived) {
    return phi_x * lor_x * stimulated + phi_y * lor_y * self;
  }
  return phi_y * lor_x * stimulated + phi_x * lor_y * self;
}

cplx amplitude_first_order(double k, double t, const FirstOrderModel& model) {
  const cplx phi = discrete_amplitude(k, model.packet, model.L);
  if (t == 0.0 || model.coupling_scale == 0.0) return phi;
  const double lo = model.quad.k_min;
  const double hi = model.upper == UpperLimit::AtK ? std::min(k, model.quad.k_max)
                                                   : model.quad.k_max;
  if (!(hi > lo)) return phi;
  const double ak = std::abs(k);
  const auto pts = clipped_breakpoints(model.quad.breakpoints(), lo, hi, {ak, -ak});
  QuadOptions opt = model.quad.options();
  opt.abs_tol = 0.0;
  opt.throw_on_failure = false;
  auto f = [&](double y) { return f_kernel(k, y, t, model); };
  const auto r = integrate(f, std::span<const double>(pts), opt);
  if (!r.converged) {
    throw SolverError("first-order", "inner quadrature did not converge at k = " +
                                         std::to_string(k));
  }
  return phi - model.coupling_scale * model.atom.gamma() / (2.0 * pi) * r.value;
}

ExcitedProbability prob_excited_first_order(double t, const FirstOrderModel& model) {
  if (!(t >= 0.0)) throw InvalidArgument("prob_excited_first_order: t must be >= 0");
  model.validate();
  const auto pts = model.quad.breakpoints();
  QuadOptions opt = model.quad.options();
  opt.abs_tol = 1e-10 / model.L;
  opt.throw_on_failure = false;
  auto f = [&](double k) { return std::norm(amplitude_first_order(k, t, model)); };
  const auto r = integrate(f, std::span<const double>(pts), opt);
  if (!r.converged) {
    throw SolverError("first-order", "outer quadrature did not converge, error " +
                                         std::to_string(r.error));
  }
  ExcitedProbability p;
  const double scale = model.L / (2.0 * pi);
  p.value = scale * r.value;
  p.error = scale * r.error;
  // Gaussian |psi|^2 mass beyond the nearer domain edge.
  const double kappa = model.packet.kappa();
  const double edge = std::min(model.quad.k_max - 1.0, 1.0 - model.quad.k_min);
  p.truncation_bound = std::erfc(edge / (std::sqrt(2.0) * kappa));
  return p;
}

FirstOrderShift induced_shift_first_order(double T, const FirstOrderModel& model,
                                          double t_eval) {
  if (!(T > 0.0)) throw InvalidArgument("induced_shift_first_order: T must be positive");
  FirstOrderShift s;
  s.T = T;
  const auto hit = prob_excited_first_order(t_eval, model.with_displacement(-T));
  const auto miss = prob_excited_first_order(t_eval, model.with_displacement(T));
  s.p_plus_hit = hit.value;
  s.p_plus_miss = miss.value;
  s.shift = hit.value - miss.value;
  s.error = hit.error + miss.error;
  return s;
}

}  // namespace photonkin::first_order
