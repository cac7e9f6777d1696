#include "photonkin/packet.hpp"

#include <cmath>

#include "photonkin/errors.hpp"
#include "photonkin/units.hpp"

namespace photonkin {

PacketSpec::PacketSpec(double kappa, double lambda)
    : kappa_(kappa), lambda_(lambda) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("PacketSpec: kappa must be positive");
  }
  if (!std::isfinite(lambda)) {
    throw InvalidArgument("PacketSpec: lambda must be finite");
  }
}

AtomSpec::AtomSpec(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("AtomSpec: gamma must be positive");
  }
}

cplx packet_envelope(double z, const PacketSpec& spec) {
  const double d = z - 1.0;
  const double kk = spec.kappa();
  return std::exp(cplx(-d * d / (4.0 * kk * kk), -z * spec.lambda()));
}

cplx packet_amplitude_continuum(double k, const PacketSpec& spec) {
  // |psi|^2 integrates to 1 because int |envelope|^2 dk = sqrt(2 pi) kappa.
  const double norm = 1.0 / std::sqrt(std::sqrt(2.0 * pi) * spec.kappa());
  return norm * packet_envelope(k, spec);
}

cplx discrete_amplitude(double k_mu, const PacketSpec& spec, double L) {
  if (!(L > 0.0)) throw InvalidArgument("discrete_amplitude: L must be positive");
  const double norm = std::sqrt(std::sqrt(2.0 * pi)) / std::sqrt(spec.kappa() * L);
  return norm * packet_envelope(k_mu, spec);
}

}  // namespace photonkin
