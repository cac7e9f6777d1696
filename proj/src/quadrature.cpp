#include "photonkin/quadrature.hpp"

#include <cmath>

namespace photonkin {

std::vector<double> resonance_breakpoints(double lo, double hi,
                                          std::span<const double> centres,
                                          double halfwidth, double step) {
  if (!(hi > lo)) throw InvalidArgument("resonance_breakpoints: empty domain");
  if (!(step > 0.0) || !(halfwidth >= 0.0)) {
    throw InvalidArgument("resonance_breakpoints: bad panel geometry");
  }
  std::vector<double> pts{lo, hi};
  for (double c : centres) {
    if (c < lo || c > hi) continue;
    const auto n = static_cast<long>(std::ceil(halfwidth / step));
    for (long j = -n; j <= n; ++j) {
      const double x = c + static_cast<double>(j) * step;
      if (x > lo && x < hi) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace photonkin
