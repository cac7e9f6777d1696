#include "photonkin/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "photonkin/errors.hpp"

namespace photonkin {

TimeGrid::TimeGrid(double t_start, double t_end, std::size_t n_points)
    : t_start_(t_start), t_end_(t_end), n_(n_points) {
  if (!(t_start >= 0.0)) throw InvalidArgument("TimeGrid: t_start must be >= 0");
  if (!(t_end > t_start)) throw InvalidArgument("TimeGrid: t_end must exceed t_start");
  if (n_points < 2) throw InvalidArgument("TimeGrid: need at least two points");
}

double TimeGrid::at(std::size_t i) const {
  if (i + 1 == n_) return t_end_;
  return t_start_ + static_cast<double>(i) * step();
}

std::vector<double> TimeGrid::samples() const {
  std::vector<double> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i] = at(i);
  return t;
}

QuadratureConfig QuadratureConfig::for_model(const AtomSpec& atom,
                                             const PacketSpec& packet) {
  QuadratureConfig q;
  q.resonance_halfwidth = 50.0 * atom.gamma();
  q.panel_width = atom.gamma() / 4.0;
  const double margin = 1.0 + 8.0 * std::max(atom.gamma(), packet.kappa());
  if (margin >= 4.0) {
    q.k_min = -(margin + 0.5);
    q.k_max = margin + 0.5;
  }
  return q;
}

void QuadratureConfig::validate() const {
  if (!(k_max > k_min)) throw InvalidArgument("QuadratureConfig: k_max must exceed k_min");
  if (!(rel_tol > 0.0)) throw InvalidArgument("QuadratureConfig: rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw InvalidArgument("QuadratureConfig: abs_tol must be >= 0");
  if (!(panel_width > 0.0)) throw InvalidArgument("QuadratureConfig: panel_width must be positive");
  if (!(resonance_halfwidth >= 0.0)) {
    throw InvalidArgument("QuadratureConfig: resonance_halfwidth must be >= 0");
  }
  if (max_panels < 1) throw InvalidArgument("QuadratureConfig: max_panels must be >= 1");
}

bool QuadratureConfig::covers_tails(double gamma, double kappa) const {
  const double margin = 1.0 + 8.0 * std::max(gamma, kappa);
  return k_min < -margin && k_max > margin;
}

std::vector<double> QuadratureConfig::breakpoints() const {
  validate();
  const std::array<double, 2> centres{-1.0, 1.0};
  auto pts = resonance_breakpoints(k_min, k_max, centres, resonance_halfwidth,
                                   panel_width);
  // |k| has a kink at 0.
  if (k_min < 0.0 && k_max > 0.0) pts.push_back(0.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

QuadOptions QuadratureConfig::options() const {
  QuadOptions o;
  o.abs_tol = abs_tol;
  o.rel_tol = rel_tol;
  o.max_panels = max_panels;
  return o;
}

}  // namespace photonkin
