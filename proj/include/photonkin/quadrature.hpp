// Globally adaptive Gauss-Kronrod (G7/K15) quadrature on a set of panels.
//
// The integrand may return double, std::complex<double>, or a std::array of
// either; vector integrands are refined jointly (the panel error is the sum of
// the component errors). Besides the integral itself the refined panel set can
// be exported as a node/weight rule, which the k-space solvers reuse to build
// tensor-product rules in two dimensions.
//
// Final panel contributions are always summed in left-to-right order, so
// results do not depend on the order in which panels were refined.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "photonkin/errors.hpp"

namespace photonkin {

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  std::size_t max_panels = 200000;
  bool throw_on_failure = true;
};

template <class V>
struct QuadResult {
  V value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = true;
};

/// Flat node/weight rule produced by adaptive refinement.
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  double error = 0.0;  // error estimate of the refinement integrand

  std::size_t size() const { return x.size(); }
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes xgk[1], xgk[3], xgk[5], xgk[7].
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
template <class T, std::size_t N>
double magnitude(const std::array<T, N>& v) {
  double s = 0.0;
  for (const auto& c : v) s += magnitude(c);
  return s;
}

inline void add_scaled(double& acc, double w, double v) { acc += w * v; }
inline void add_scaled(std::complex<double>& acc, double w,
                       const std::complex<double>& v) {
  acc += w * v;
}
template <class T, std::size_t N>
void add_scaled(std::array<T, N>& acc, double w, const std::array<T, N>& v) {
  for (std::size_t i = 0; i < N; ++i) add_scaled(acc[i], w, v[i]);
}

inline double diff_magnitude(double a, double b) { return std::abs(a - b); }
inline double diff_magnitude(const std::complex<double>& a,
                             const std::complex<double>& b) {
  return std::abs(a - b);
}
template <class T, std::size_t N>
double diff_magnitude(const std::array<T, N>& a, const std::array<T, N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += diff_magnitude(a[i], b[i]);
  return s;
}

template <class V>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  V value{};
  double error = 0.0;
};

template <class V, class F>
Panel<V> gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  V kronrod{};
  V gauss{};
  const V fc = f(centre);
  add_scaled(kronrod, kWgk[7], fc);
  add_scaled(gauss, kWg[3], fc);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const V f1 = f(centre - dx);
    const V f2 = f(centre + dx);
    add_scaled(kronrod, kWgk[j], f1);
    add_scaled(kronrod, kWgk[j], f2);
    if (j % 2 == 1) {
      add_scaled(gauss, kWg[j / 2], f1);
      add_scaled(gauss, kWg[j / 2], f2);
    }
  }
  Panel<V> p;
  p.a = a;
  p.b = b;
  add_scaled(p.value, half, kronrod);
  V g{};
  add_scaled(g, half, gauss);
  p.error = diff_magnitude(p.value, g);
  return p;
}

template <class V, class F>
std::pair<std::vector<Panel<V>>, QuadResult<V>> refine(
    F& f, std::span<const double> breakpoints, const QuadOptions& opt) {
  if (breakpoints.size() < 2) {
    throw InvalidArgument("quadrature needs at least two breakpoints");
  }
  std::vector<double> pts(breakpoints.begin(), breakpoints.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto worse = [](const Panel<V>& l, const Panel<V>& r) {
    return l.error < r.error;
  };
  std::priority_queue<Panel<V>, std::vector<Panel<V>>, decltype(worse)> heap(
      worse);

  QuadResult<V> res;
  V total{};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel<V> p = gauss_kronrod_15<V>(f, pts[i], pts[i + 1]);
    add_scaled(total, 1.0, p.value);
    total_err += p.error;
    heap.push(std::move(p));
  }
  res.evaluations = 15 * heap.size();

  auto target = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * magnitude(total));
  };
  while (total_err > target() && heap.size() < opt.max_panels) {
    Panel<V> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(std::move(worst));
      break;  // cannot split further in floating point
    }
    Panel<V> left = gauss_kronrod_15<V>(f, worst.a, mid);
    Panel<V> right = gauss_kronrod_15<V>(f, mid, worst.b);
    res.evaluations += 30;
    add_scaled(total, -1.0, worst.value);
    add_scaled(total, 1.0, left.value);
    add_scaled(total, 1.0, right.value);
    total_err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }

  std::vector<Panel<V>> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel<V>& l, const Panel<V>& r) { return l.a < r.a; });

  // Re-sum in panel order for a result independent of refinement history.
  V sum{};
  double err = 0.0;
  for (const auto& p : panels) {
    add_scaled(sum, 1.0, p.value);
    err += p.error;
  }
  res.value = sum;
  res.error = err;
  res.panels = panels.size();
  res.converged =
      err <= std::max(opt.abs_tol, opt.rel_tol * magnitude(sum));
  return {std::move(panels), res};
}

}  // namespace detail

/// Integrate `f` over [breakpoints.front(), breakpoints.back()] (after
/// sorting), starting from one panel between each pair of breakpoints.
template <class F>
auto integrate(F f, std::span<const double> breakpoints,
               const QuadOptions& opt = {}) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  auto [panels, res] = detail::refine<V>(f, breakpoints, opt);
  if (!res.converged && opt.throw_on_failure) {
    throw QuadratureError("adaptive quadrature did not converge", res.error);
  }
  return res;
}

template <class F>
auto integrate(F f, double a, double b, const QuadOptions& opt = {}) {
  const std::array<double, 2> pts{a, b};
  return integrate(std::move(f), std::span<const double>(pts), opt);
}

/// Refine panels on `f` and return the resulting 15-point-per-panel rule.
/// Any function resolved by `f` can then be integrated by a weighted sum.
template <class F>
QuadRule adapt_rule(F f, std::span<const double> breakpoints,
                    const QuadOptions& opt = {}) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  auto [panels, res] = detail::refine<V>(f, breakpoints, opt);
  if (!res.converged && opt.throw_on_failure) {
    throw QuadratureError("rule refinement did not converge", res.error);
  }
  QuadRule rule;
  rule.error = res.error;
  rule.x.reserve(15 * panels.size());
  rule.w.reserve(15 * panels.size());
  for (const auto& p : panels) {
    const double centre = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);
    for (std::size_t j = 0; j < 7; ++j) {
      rule.x.push_back(centre - half * detail::kXgk[j]);
      rule.w.push_back(half * detail::kWgk[j]);
    }
    rule.x.push_back(centre);
    rule.w.push_back(half * detail::kWgk[7]);
    for (std::size_t j = 7; j-- > 0;) {
      rule.x.push_back(centre + half * detail::kXgk[j]);
      rule.w.push_back(half * detail::kWgk[j]);
    }
  }
  return rule;
}

/// Breakpoints over [lo, hi] with forced panels of width `step` inside
/// |k - c| < halfwidth for every centre c. Centres outside [lo, hi] are
/// ignored; the result is sorted and de-duplicated.
std::vector<double> resonance_breakpoints(double lo, double hi,
                                          std::span<const double> centres,
                                          double halfwidth, double step);

}  // namespace photonkin
