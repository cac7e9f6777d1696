#include "photonkin/ww_kinetics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "photonkin/complex_math.hpp"
#include "photonkin/errors.hpp"
#include "photonkin/units.hpp"

namespace photonkin::ww {

WWModel::WWModel(AtomSpec atom_, PacketSpec packet_)
    : WWModel(atom_, packet_, QuadratureConfig::for_model(atom_, packet_)) {}

WWModel::WWModel(AtomSpec atom_, PacketSpec packet_, QuadratureConfig quad_)
    : atom(atom_), packet(packet_), quad(quad_) {
  quad.validate();
}

WWModel WWModel::with_displacement(double lambda) const {
  return {atom, packet.displaced(lambda), quad};
}

double WWModel::prefactor() const {
  return atom.gamma() / (packet.kappa() * std::sqrt(8.0 * pi * pi * pi));
}

cplx chi(double z, double t, double gamma) {
  const cplx denom(gamma, 1.0 - std::abs(z));
  if (std::isinf(t) && t > 0.0) return 1.0 / denom;
  return -expm1(-denom * t) / denom;
}

cplx xi(double z, const PacketSpec& packet) { return packet_envelope(z, packet); }

double density_C(double k1, double k2, double t, const WWModel& model) {
  const double g = model.atom.gamma();
  const cplx s = xi(k1, model.packet) * chi(k2, t, g) + xi(k2, model.packet) * chi(k1, t, g);
  return model.prefactor() * std::norm(s);
}

QuadRule ground_rule(double t, const WWModel& model) {
  const double g = model.atom.gamma();
  const auto pts = model.quad.breakpoints();
  const double pref = model.prefactor();

  auto components = [&](double k) {
    const cplx x = xi(k, model.packet);
    const cplx c = chi(k, t, g);
    return std::array<cplx, 3>{cplx(std::norm(x)), cplx(std::norm(c)), x * std::conj(c)};
  };

  // Coarse pass on the initial panels to weight the components by their
  // influence on P- = pref (N_xi N_chi + |Q|^2).
  QuadOptions coarse;
  coarse.max_panels = 1;
  coarse.throw_on_failure = false;
  const auto est = integrate(components, std::span<const double>(pts), coarse).value;
  const double n_xi = std::abs(est[0]);
  const double n_chi = std::abs(est[1]);
  const double q = std::abs(est[2]);
  const double floor = 1e-300;
  const std::array<double, 3> weight{pref * std::max(n_chi, floor),
                                     pref * std::max(n_xi, floor),
                                     2.0 * pref * std::max(q, floor)};

  auto weighted = [&](double k) {
    auto v = components(k);
    for (std::size_t i = 0; i < 3; ++i) v[i] *= weight[i];
    return v;
  };
  QuadOptions opt = model.quad.options();
  // The weighted total is about 2 P-.
  opt.rel_tol = 0.5 * model.quad.rel_tol;
  return adapt_rule(weighted, std::span<const double>(pts), opt);
}

Probability prob_ground(double t, const WWModel& model) {
  if (!(t >= 0.0)) throw InvalidArgument("prob_ground: t must be >= 0");
  if (t == 0.0) return {};
  QuadRule rule;
  try {
    rule = ground_rule(t, model);
  } catch (const QuadratureError& e) {
    throw SolverError("ww-kinetics", std::string("P-(t) quadrature failed, achieved error ") +
                                         std::to_string(e.achieved_error()));
  }
  const double g = model.atom.gamma();
  double s_xi = 0.0;
  double s_chi = 0.0;
  cplx q = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const cplx x = xi(rule.x[i], model.packet);
    const cplx c = chi(rule.x[i], t, g);
    s_xi += rule.w[i] * std::norm(x);
    s_chi += rule.w[i] * std::norm(c);
    q += rule.w[i] * x * std::conj(c);
  }
  Probability p;
  p.value = model.prefactor() * (s_xi * s_chi + std::norm(q));
  p.error = rule.error;
  p.nodes = rule.size();
  return p;
}

double prob_ground_direct(double t, const WWModel& model) {
  if (t == 0.0) return 0.0;
  const auto rule = ground_rule(t, model);
  const double g = model.atom.gamma();
  const std::size_t n = rule.size();
  std::vector<cplx> x(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = xi(rule.x[i], model.packet);
    c[i] = chi(rule.x[i], t, g);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += rule.w[j] * std::norm(x[i] * c[j] + x[j] * c[i]);
    }
    total += rule.w[i] * row;
  }
  return 0.5 * model.prefactor() * total;
}

DecayRate decay_rate(const KineticsTrace& trace, const RateOptions& opt) {
  const std::size_t n = trace.size();
  if (n < 3 || trace.p_plus.size() != n || trace.p_minus.size() != n) {
    throw InvalidArgument("decay_rate: trace needs >= 3 consistent samples");
  }
  if (opt.normalization == RateNormalization::AnsatzPopulation && !(opt.gamma > 0.0)) {
    throw InvalidArgument("decay_rate: ansatz normalisation needs gamma > 0");
  }
  DecayRate out;
  out.times = trace.times;
  out.rate.assign(n, std::numeric_limits<double>::quiet_NaN());

  // d/dt of P- (equivalently -d/dt of P+ = 1 - P-).
  auto derivative = [&](std::size_t i) {
    const auto& p = trace.p_minus;
    const auto& t = trace.times;
    if (i == 0) {
      const double h = t[1] - t[0];
      return (-3.0 * p[0] + 4.0 * p[1] - p[2]) / (2.0 * h);
    }
    if (i + 1 == n) {
      const double h = t[n - 1] - t[n - 2];
      return (3.0 * p[n - 1] - 4.0 * p[n - 2] + p[n - 3]) / (2.0 * h);
    }
    return (p[i + 1] - p[i - 1]) / (t[i + 1] - t[i - 1]);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double denom = opt.normalization == RateNormalization::OneMinusGround
                             ? trace.p_plus[i]
                             : std::exp(-2.0 * opt.gamma * trace.times[i]);
    if (!(denom > opt.epsilon)) {
      out.truncated = true;
      break;
    }
    out.rate[i] = derivative(i) / denom;
    out.valid = i + 1;
  }
  return out;
}

RatePeak rate_peak(const DecayRate& r, double t_lo, double t_hi) {
  std::size_t best = r.times.size();
  for (std::size_t i = 0; i < r.valid; ++i) {
    if (r.times[i] < t_lo || r.times[i] > t_hi) continue;
    if (best == r.times.size() || r.rate[i] > r.rate[best]) best = i;
  }
  if (best == r.times.size()) throw InvalidArgument("rate_peak: empty window");
  RatePeak pk{r.times[best], r.rate[best]};
  if (best > 0 && best + 1 < r.valid) {
    const double y0 = r.rate[best - 1];
    const double y1 = r.rate[best];
    const double y2 = r.rate[best + 1];
    const double curv = y0 - 2.0 * y1 + y2;
    if (curv < 0.0) {
      const double h = r.times[best + 1] - r.times[best];
      const double off = 0.5 * (y0 - y2) / curv;
      pk.time = r.times[best] + off * h;
      pk.rate = y1 - 0.25 * (y0 - y2) * off;
    }
  }
  return pk;
}

KineticsTrace kinetics_trace(const WWModel& model, const TimeGrid& grid, RateOptions rate) {
  KineticsTrace tr;
  tr.times = grid.samples();
  tr.p_minus.reserve(tr.times.size());
  tr.error_estimate.reserve(tr.times.size());
  for (double t : tr.times) {
    const auto p = prob_ground(t, model);
    tr.p_minus.push_back(p.value);
    tr.error_estimate.push_back(p.error);
  }
  tr.p_plus.reserve(tr.times.size());
  for (double pm : tr.p_minus) tr.p_plus.push_back(1.0 - pm);
  tr.p_plus_definition = "1 - P-";
  if (rate.gamma == 0.0) rate.gamma = model.atom.gamma();
  tr.gamma_of_t = decay_rate(tr, rate).rate;
  return tr;
}

QuantumShift induced_shift_quantum(double T, const WWModel& model, double t_inf) {
  if (std::abs(T + model.packet.lambda()) > 1e-9 * std::max(1.0, std::abs(T))) {
    throw InvalidArgument("induced_shift_quantum: T must equal -lambda of the model packet");
  }
  QuantumShift s;
  const double g = model.atom.gamma();
  s.closed_form = -std::sqrt(2.0 * pi) * (g / model.packet.spectral_width()) *
                  std::exp(-2.0 * g * T);
  const auto hit = prob_ground(t_inf, model);
  const auto miss = prob_ground(t_inf, model.with_displacement(T));
  s.p_minus_hit = hit.value;
  s.p_minus_miss = miss.value;
  s.numerical = -(hit.value - miss.value);
  s.error = hit.error + miss.error;
  return s;
}

std::vector<double> mode_wavenumbers(double L, const WWModel& model) {
  if (!(L > 0.0)) throw InvalidArgument("mode_wavenumbers: L must be positive");
  const double dk = 2.0 * pi / L;
  const auto n_lo = static_cast<long>(std::ceil(model.quad.k_min / dk));
  const auto n_hi = static_cast<long>(std::floor(model.quad.k_max / dk));
  std::vector<double> k;
  k.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (long n = n_lo; n <= n_hi; ++n) k.push_back(dk * static_cast<double>(n));
  return k;
}

double doubly_occupied_prob(double L, double t, const WWModel& model) {
  const double g2 = model.atom.gamma() / L;
  double sum = 0.0;
  for (double k : mode_wavenumbers(L, model)) {
    const cplx b_over = discrete_amplitude(k, model.packet, L) * chi(k, t, model.atom.gamma());
    sum += 2.0 * g2 * std::norm(b_over);
  }
  return sum;
}

double pairs_singly_occupied_prob(double L, double t, const WWModel& model,
                                  bool include_diagonal) {
  const double g2 = model.atom.gamma() / L;
  double s_phi = 0.0;
  double s_chi = 0.0;
  double s_diag = 0.0;
  cplx cross = 0.0;
  for (double k : mode_wavenumbers(L, model)) {
    const cplx phi = discrete_amplitude(k, model.packet, L);
    const cplx c = chi(k, t, model.atom.gamma());
    s_phi += std::norm(phi);
    s_chi += std::norm(c);
    cross += phi * std::conj(c);
    s_diag += std::norm(phi * c);
  }
  // sum_{mu,nu} |g phi_nu chi_mu + g phi_mu chi_nu|^2 expanded; the mu = nu
  // terms are |2 g phi chi|^2.
  const double full = g2 * (2.0 * s_phi * s_chi + 2.0 * std::norm(cross));
  const double diag = 4.0 * g2 * s_diag;
  return 0.5 * (include_diagonal ? full : full - diag);
}

}  // namespace photonkin::ww
