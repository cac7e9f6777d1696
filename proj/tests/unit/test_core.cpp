#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "photonkin/errors.hpp"
#include "photonkin/grid.hpp"
#include "photonkin/packet.hpp"
#include "photonkin/quadrature.hpp"
#include "photonkin/units.hpp"

using namespace photonkin;

TEST_CASE("packet profile peaks at k = 1 with 1/e at 2 kappa") {
  const PacketSpec p(0.25, -20.0);
  CHECK(std::abs(packet_envelope(1.0, p)) == doctest::Approx(1.0));
  CHECK(std::abs(packet_envelope(1.5, p)) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(packet_envelope(0.5, p)) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(packet_envelope(1.1, p)) < 1.0);
}

TEST_CASE("continuum packet is normalised") {
  const AtomSpec atom(0.0125);
  for (double kappa : {0.05, 0.25, 1.0}) {
    CAPTURE(kappa);
    const PacketSpec p(kappa, -20.0);
    const auto q = QuadratureConfig::for_model(atom, p);
    CHECK(q.covers_tails(atom.gamma(), kappa));
    auto opt = q.options();
    opt.rel_tol = 1e-12;
    const auto bp = q.breakpoints();
    const auto r = integrate(
        [&](double k) { return std::norm(packet_amplitude_continuum(k, p)); },
        std::span<const double>(bp), opt);
    CHECK(std::abs(r.value - 1.0) < 1e-8);
  }
}

TEST_CASE("displacement changes only the phase") {
  const PacketSpec a(0.25, -20.0), b(0.25, 35.0);
  for (double k : {-1.2, 0.3, 0.9, 1.0, 1.7}) {
    CHECK(std::abs(packet_amplitude_continuum(k, a)) ==
          doctest::Approx(std::abs(packet_amplitude_continuum(k, b))).epsilon(1e-14));
  }
  CHECK(std::arg(packet_envelope(1.0, a) / packet_envelope(1.0, b)) ==
        doctest::Approx(std::remainder(55.0, 2.0 * pi)));
}

TEST_CASE("discrete packet sums to one and matches the continuum density") {
  const PacketSpec p(0.25, -20.0);
  for (double L : {251.32, 502.64}) {
    CAPTURE(L);
    double sum = 0.0;
    for (int n = -400; n <= 400; ++n) sum += std::norm(discrete_amplitude(2.0 * pi * n / L, p, L));
    CHECK(std::abs(sum - 1.0) < 1e-3);
  }
  const double L = 251.32;
  for (double k : {0.7, 1.0, 1.3}) {
    CHECK(std::norm(discrete_amplitude(k, p, L)) * L / (2.0 * pi) ==
          doctest::Approx(std::norm(packet_amplitude_continuum(k, p))).epsilon(1e-12));
  }
  CHECK(std::norm(discrete_amplitude(1.0, p, 2 * L)) ==
        doctest::Approx(0.5 * std::norm(discrete_amplitude(1.0, p, L))));
  CHECK_THROWS_AS(discrete_amplitude(1.0, p, 0.0), InvalidArgument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PacketSpec(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(PacketSpec(0.25, NAN), InvalidArgument);
  CHECK_THROWS_AS(AtomSpec(-1.0), InvalidArgument);
  const PacketSpec p(0.25, -20.0);
  CHECK(p.arrival_time() == 20.0);
  CHECK(p.length() == 4.0);
  CHECK(AtomSpec(0.0125).probability_rate() == 0.025);
}

TEST_CASE("time grid") {
  const auto g = TimeGrid::standard();
  CHECK(g.size() == 4001);
  CHECK(g.step() == doctest::Approx(0.1));
  CHECK(g.at(4000) == 400.0);
  CHECK(g.samples()[10] == doctest::Approx(1.0));
  CHECK_THROWS_AS(TimeGrid(-1.0, 1.0, 3), InvalidArgument);
  CHECK_THROWS_AS(TimeGrid(1.0, 1.0, 3), InvalidArgument);
  CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 1), InvalidArgument);
}

TEST_CASE("quadrature config") {
  const auto q = QuadratureConfig::for_model(AtomSpec(0.0125), PacketSpec(0.25, -20.0));
  CHECK(q.k_min == -4.0);
  CHECK(q.k_max == 4.0);
  CHECK(q.panel_width == doctest::Approx(0.003125));
  const auto bp = q.breakpoints();
  CHECK(std::find(bp.begin(), bp.end(), 0.0) != bp.end());
  CHECK(std::find(bp.begin(), bp.end(), 1.0) != bp.end());
  CHECK(std::find(bp.begin(), bp.end(), -1.0) != bp.end());
  QuadratureConfig bad = q;
  bad.k_max = -5.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = q;
  bad.k_max = 2.0;
  CHECK_FALSE(bad.covers_tails(0.0125, 0.25));
}
