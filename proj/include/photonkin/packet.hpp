// Single-photon Gaussian wave packet and two-level atom parameters.

#pragma once

#include <complex>

namespace photonkin {

using cplx = std::complex<double>;

/// Gaussian packet centred at K = 1 with wavenumber width kappa, launched
/// from x = lambda (negative lambda: the packet reaches the atom at
/// t = -lambda; positive lambda: it has already passed).
class PacketSpec {
 public:
  PacketSpec(double kappa, double lambda);

  double kappa() const noexcept { return kappa_; }
  double lambda() const noexcept { return lambda_; }

  double length() const noexcept { return 1.0 / kappa_; }
  /// delta = c * kappa with c = 1.
  double spectral_width() const noexcept { return kappa_; }
  double arrival_time() const noexcept { return -lambda_; }

  PacketSpec displaced(double lambda) const { return {kappa_, lambda}; }

 private:
  double kappa_;
  double lambda_;
};

/// Two-level atom; gamma is the amplitude decay rate (probability rate 2 gamma).
class AtomSpec {
 public:
  explicit AtomSpec(double gamma);

  double gamma() const noexcept { return gamma_; }
  double probability_rate() const noexcept { return 2.0 * gamma_; }
  double omega0() const noexcept { return 1.0; }

 private:
  double gamma_;
};

/// exp[-(z-1)^2/(4 kappa^2) - i z lambda]: the unnormalised packet profile.
cplx packet_envelope(double z, const PacketSpec& spec);

/// Continuum amplitude psi(k) normalised so that int |psi|^2 dk = 1.
cplx packet_amplitude_continuum(double k, const PacketSpec& spec);

/// Discrete mode amplitude (2 pi)^{1/4} / sqrt(kappa L) * envelope(k) for
/// modes spaced 2 pi / L.
cplx discrete_amplitude(double k_mu, const PacketSpec& spec, double L);

}  // namespace photonkin
