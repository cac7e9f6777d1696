#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "photonkin/quadrature.hpp"
#include "photonkin/units.hpp"

using namespace photonkin;

TEST_CASE("degree-20 polynomial") {
  auto f = [](double x) { return std::pow(x, 20) + 3.0 * x * x - x; };
  QuadOptions opt;
  opt.rel_tol = 1e-14;
  const auto r = integrate(f, -1.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(2.0 / 21.0 + 2.0).epsilon(1e-13));
}

TEST_CASE("narrow Lorentzian against arctangent") {
  const double g = 0.0125;
  auto f = [g](double x) { return g / (g * g + (x - 1.0) * (x - 1.0)); };
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  const auto r = integrate(f, -4.0, 4.0, opt);
  const double exact = std::atan(3.0 / g) + std::atan(5.0 / g);
  CHECK(std::abs(r.value - exact) < 1e-9 * exact);
  CHECK(r.converged);
}

TEST_CASE("complex and array integrands") {
  auto f = [](double x) { return std::exp(std::complex<double>(0.0, x)); };
  const auto r = integrate(f, 0.0, pi);
  CHECK(std::abs(r.value - std::complex<double>(0.0, 2.0)) < 1e-12);

  auto h = [](double x) { return std::array<double, 2>{x, x * x}; };
  const auto s = integrate(h, 0.0, 3.0);
  CHECK(s.value[0] == doctest::Approx(4.5));
  CHECK(s.value[1] == doctest::Approx(9.0));
}

TEST_CASE("exported rule reproduces the refined integral") {
  const double g = 0.05;
  auto f = [g](double x) { return 1.0 / (g * g + x * x); };
  const std::array<double, 3> bp{-2.0, 0.0, 2.0};
  const auto rule = adapt_rule(f, std::span<const double>(bp));
  double sum = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += rule.w[i] * f(rule.x[i]);
    wsum += rule.w[i];
  }
  CHECK(wsum == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(sum == doctest::Approx(2.0 * std::atan(2.0 / g) / g).epsilon(1e-9));
  CHECK(rule.size() % 15 == 0);
}

TEST_CASE("non-convergence throws or reports") {
  auto f = [](double x) { return std::pow(std::abs(x - 0.3), -0.9); };
  QuadOptions opt;
  opt.rel_tol = 1e-15;
  opt.max_panels = 8;
  CHECK_THROWS_AS(integrate(f, -1.0, 1.0, opt), QuadratureError);
  opt.throw_on_failure = false;
  const auto r = integrate(f, -1.0, 1.0, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.error > 0.0);
}

TEST_CASE("resonance breakpoints") {
  const std::array<double, 2> c{-1.0, 1.0};
  const auto bp = resonance_breakpoints(-4.0, 4.0, c, 0.5, 0.1);
  CHECK(bp.front() == -4.0);
  CHECK(bp.back() == 4.0);
  for (std::size_t i = 1; i < bp.size(); ++i) CHECK(bp[i] > bp[i - 1]);
  int inside = 0;
  for (double x : bp) inside += std::abs(x - 1.0) <= 0.5 + 1e-12;
  CHECK(inside >= 10);
  const auto one = integrate([](double) { return 1.0; }, std::span<const double>(bp));
  CHECK(one.value == doctest::Approx(8.0).epsilon(1e-14));
  CHECK_THROWS_AS(resonance_breakpoints(1.0, -1.0, c, 0.5, 0.1), InvalidArgument);
  CHECK_THROWS_AS(resonance_breakpoints(-4.0, 4.0, c, 0.5, 0.0), InvalidArgument);
}

TEST_CASE("results are bitwise reproducible") {
  auto f = [](double x) { return std::sin(40.0 * x) * std::exp(-x * x); };
  const auto a = integrate(f, -5.0, 5.0);
  const auto b = integrate(f, -5.0, 5.0);
  CHECK(a.value == b.value);
  CHECK(a.evaluations == b.evaluations);
}
