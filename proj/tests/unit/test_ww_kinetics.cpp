#include <doctest.h>

#include <cmath>
#include <random>

#include "photonkin/units.hpp"
#include "photonkin/ww_kinetics.hpp"

using namespace photonkin;
using namespace photonkin::ww;

namespace {
constexpr double kGamma = 0.0125;
constexpr double kKappa = 0.25;

WWModel model(double lambda) { return WWModel(AtomSpec(kGamma), PacketSpec(kKappa, lambda)); }

// Narrow-line limit of P-hit - P-miss: the packet overlap with the decaying
// Lorentzian reduces to an error-function window around the arrival time.
double erf_difference(double t, double T) {
  const double s = kGamma / (2.0 * kKappa * kKappa);
  const double J = 0.5 * std::exp(-kGamma * T + kGamma * kGamma / (4.0 * kKappa * kKappa)) *
                   (std::erf(kKappa * (t - T + s)) - std::erf(kKappa * (-T + s)));
  return std::sqrt(2.0 * pi) * (kGamma / kKappa) * J * J;
}
}  // namespace

TEST_CASE("chi") {
  CHECK(std::abs(chi(0.3, 0.0, kGamma)) == 0.0);
  CHECK(std::abs(chi(1.0, INFINITY, kGamma)) == doctest::Approx(80.0));
  CHECK(std::abs(chi(-1.0, INFINITY, kGamma)) == doctest::Approx(80.0));
  for (double z : {0.9, 0.99, 1.01, -1.05, 1.3}) {
    const double d = 1.0 - std::abs(z);
    CHECK(std::norm(chi(z, INFINITY, kGamma)) ==
          doctest::Approx(1.0 / (kGamma * kGamma + d * d)));
    CHECK(std::abs(chi(z, 2000.0, kGamma) - chi(z, INFINITY, kGamma)) < 1e-9);
  }
}

TEST_CASE("xi") {
  CHECK(std::abs(xi(1.0, PacketSpec(kKappa, 0.0)) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(xi(1.5, PacketSpec(kKappa, 7.0))) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(xi(0.8, PacketSpec(kKappa, 7.0))) ==
        doctest::Approx(std::abs(xi(0.8, PacketSpec(kKappa, -3.0)))));
}

TEST_CASE("C is symmetric, nonnegative and zero at t = 0") {
  const auto m = model(-20.0);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> k(-4.0, 4.0), t(0.0, 400.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = k(rng), b = k(rng), s = t(rng);
    const double c1 = density_C(a, b, s, m), c2 = density_C(b, a, s, m);
    if (c1 < 0.0 || std::abs(c1 - c2) > 1e-12 * std::max(1.0, c1)) {
      FAIL("asymmetric or negative at " << a << ", " << b << ", " << s);
    }
    if (i < 50) CHECK(density_C(a, b, 0.0, m) == 0.0);
  }
}

TEST_CASE("P- at t = 0 vanishes") { CHECK(prob_ground(0.0, model(-20.0)).value == 0.0); }

TEST_CASE("factorised sum equals the direct tensor sum") {
  for (double t : {10.0, 25.0, 100.0}) {
    const auto m = model(-20.0);
    CHECK(prob_ground(t, m).value == doctest::Approx(prob_ground_direct(t, m)).epsilon(1e-11));
  }
}

// Fails for t < 50: over the band 1 - |k| <= 1 the transient term
// -2 e^{-gamma t} cos(Delta t) no longer cancels the constant part of
// |1 - e^{(-gamma + i Delta) t}|^2, which leaves P- short by roughly
// gamma (1 + e^{-2 gamma t}) / (pi (1 - e^{-2 gamma t})): 2.2% at t = 20,
// 0.95% at t = 50, 0.54% at t = 200.
TEST_CASE("miss case follows spontaneous decay" * doctest::test_suite("unattained")) {
  const auto m = model(20.0);
  for (double t : {20.0, 50.0, 100.0, 150.0, 200.0}) {
    const double ref = 1.0 - std::exp(-2.0 * kGamma * t);
    CAPTURE(t);
    CHECK(std::abs(prob_ground(t, m).value / ref - 1.0) < 0.01);
  }
}

// Fails: the detuning 1 - |k| never exceeds 1 on the photon side, so the
// Lorentzian wing below k = 0 is missing and the domain [-4, 4] cuts more.
// Analytic value (atan 80 + atan 240)/pi = 0.99470.
TEST_CASE("miss case deposits unit probability at t = 400" * doctest::test_suite("unattained")) {
  const double p = prob_ground(400.0, model(20.0)).value;
  CAPTURE(p);
  CHECK(std::abs(p - 1.0) < 1e-3);
  CHECK(p == doctest::Approx((std::atan(80.0) + std::atan(240.0)) / pi).epsilon(1e-4));
}

TEST_CASE("hit minus miss against the error-function oracle") {
  const auto hit = model(-20.0), miss = model(20.0);
  for (double t : {22.0, 30.0, 50.0, 100.0, 400.0}) {
    const double d = prob_ground(t, hit).value - prob_ground(t, miss).value;
    CAPTURE(t);
    CHECK(d == doctest::Approx(erf_difference(t, 20.0)).epsilon(0.015));
  }
}

TEST_CASE("arrival locality") {
  const auto hit = model(-20.0), miss = model(20.0);
  for (double t : {1.0, 2.0, 3.0, 4.0}) {
    CHECK(std::abs(prob_ground(t, hit).value - prob_ground(t, miss).value) < 1e-3);
  }
}

TEST_CASE("halving rel_tol moves P- by less than the error estimate") {
  auto m = model(-20.0);
  auto fine = m;
  fine.quad.rel_tol = 0.5 * m.quad.rel_tol;
  for (double t : {5.0, 20.0, 21.6, 60.0, 400.0}) {
    const auto a = prob_ground(t, m), b = prob_ground(t, fine);
    CAPTURE(t);
    CHECK(std::abs(a.value - b.value) <= a.error);
  }
}

TEST_CASE("miss-case trace is increasing") {
  const auto miss = kinetics_trace(model(20.0), TimeGrid(0.0, 400.0, 41));
  CHECK(miss.p_plus_definition == "1 - P-");
  for (std::size_t i = 1; i < miss.size(); ++i) {
    CHECK(miss.p_minus[i] > miss.p_minus[i - 1]);
    CHECK(miss.p_plus[i] == doctest::Approx(1.0 - miss.p_minus[i]));
  }
}

// Fails near t = 380: the same band-edge ringing, of size e^{-gamma t}/t,
// outgrows the curvature of the exponential (1e-5 against 5e-6).
TEST_CASE("miss-case trace is concave" * doctest::test_suite("unattained")) {
  const auto miss = kinetics_trace(model(20.0), TimeGrid(0.0, 400.0, 41));
  for (std::size_t i = 1; i + 1 < miss.size(); ++i) {
    CAPTURE(miss.times[i]);
    CHECK(miss.p_minus[i + 1] - 2.0 * miss.p_minus[i] + miss.p_minus[i - 1] < 0.0);
  }
}

TEST_CASE("hit-case trace") {
  const TimeGrid grid(0.0, 400.0, 41);
  const auto miss = kinetics_trace(model(20.0), grid);
  const auto hit = kinetics_trace(model(-20.0), grid);
  CHECK(std::abs(hit.p_minus[40] - hit.p_minus[30]) < 1e-3);
  // the extra growth over the miss case happens around the arrival
  const double before = (hit.p_minus[1] - miss.p_minus[1]);
  const double during = (hit.p_minus[3] - miss.p_minus[3]) - (hit.p_minus[1] - miss.p_minus[1]);
  const double after = (hit.p_minus[10] - miss.p_minus[10]) - (hit.p_minus[4] - miss.p_minus[4]);
  CHECK(std::abs(before) < 1e-3);
  CHECK(during > 0.05);
  CHECK(std::abs(after) < 0.2 * during);
}

// Fails: P- of the miss case carries a ringing at frequency 1 (and 4) from
// the edges of the detuning band 1 - |k| at k = 0 and k = +-4. Its
// derivative shows up as +-6% swings of the rate near t = 6, still ~2% at
// t = 90; coarser grids only hide it.
TEST_CASE("unperturbed decay rate is 2 gamma" * doctest::test_suite("unattained")) {
  const auto tr = kinetics_trace(model(20.0), TimeGrid(0.0, 100.0, 1001));
  const auto r = decay_rate(tr, {RateNormalization::AnsatzPopulation, kGamma});
  double worst = 0.0, worst_t = 0.0;
  for (std::size_t i = 0; i < r.valid; ++i) {
    if (r.times[i] < 5.0) continue;
    const double dev = std::abs(r.rate[i] / (2.0 * kGamma) - 1.0);
    if (dev > worst) {
      worst = dev;
      worst_t = r.times[i];
    }
  }
  CAPTURE(worst_t);
  CAPTURE(worst);
  CHECK(worst < 0.02);
}

TEST_CASE("unperturbed decay rate averages to 2 gamma") {
  const auto m = model(20.0);
  const double p5 = prob_ground(5.0, m).value, p100 = prob_ground(100.0, m).value;
  // int_5^100 Gamma e^{-2 gamma t} dt = P-(100) - P-(5)
  const double mean = (p100 - p5) / (std::exp(-2.0 * kGamma * 5.0) - std::exp(-2.0 * kGamma * 100.0));
  CHECK(mean == doctest::Approx(1.0).epsilon(0.01));
}

// Fails: besides the ringing above, with P+ = 1 - P- the missing 0.5% of
// emitted probability makes P+ level off, and the ratio drifts about 6%
// below 2 gamma by t = 100.
TEST_CASE("unperturbed decay rate is 2 gamma with P+ = 1 - P-" * doctest::test_suite("unattained")) {
  const auto tr = kinetics_trace(model(20.0), TimeGrid(0.0, 100.0, 201));
  const auto r = decay_rate(tr, {RateNormalization::OneMinusGround, kGamma});
  double worst = 0.0;
  for (std::size_t i = 0; i < r.valid; ++i) {
    if (r.times[i] >= 5.0) worst = std::max(worst, std::abs(r.rate[i] / (2.0 * kGamma) - 1.0));
  }
  CAPTURE(worst);
  CHECK(worst < 0.02);
}

TEST_CASE("decay-rate peak for the hit case") {
  const auto tr = kinetics_trace(model(-20.0), TimeGrid(0.0, 60.0, 601));
  const auto r = decay_rate(tr, {RateNormalization::AnsatzPopulation, kGamma});
  const auto pk = rate_peak(r, 0.0, 60.0);
  CHECK(pk.time == doctest::Approx(21.624).epsilon(0.01));
  CHECK(pk.rate / (2.0 * kGamma) == doctest::Approx(1.9189).epsilon(0.005));
}

TEST_CASE("decay rate truncates where the denominator vanishes") {
  KineticsTrace tr;
  for (int i = 0; i < 10; ++i) {
    tr.times.push_back(i);
    tr.p_plus.push_back(1.0 - 0.1 * i);
    tr.p_minus.push_back(0.1 * i);
  }
  const auto r = decay_rate(tr, {RateNormalization::OneMinusGround, 0.0, 0.35});
  CHECK(r.truncated);
  CHECK(r.valid == 7);
  CHECK(std::isnan(r.rate[8]));
  CHECK(r.rate[2] == doctest::Approx(0.1 / 0.8));
  CHECK_THROWS_AS(decay_rate(tr, {RateNormalization::AnsatzPopulation, 0.0}), InvalidArgument);
}

TEST_CASE("induced shift") {
  const auto s = induced_shift_quantum(20.0, model(-20.0));
  CHECK(s.closed_form == doctest::Approx(-std::sqrt(2.0 * pi) / 20.0 * std::exp(-0.5)));
  CHECK(s.closed_form == doctest::Approx(-0.076).epsilon(0.001 / 0.076));
  CHECK(s.numerical == doctest::Approx(s.closed_form).epsilon(0.05));
  CHECK(s.numerical == doctest::Approx(-0.076111).epsilon(1e-3));
  for (double T : {0.0, 50.0, 300.0}) {
    CHECK(induced_shift_quantum(T, model(-T), 1.0).closed_form < 0.0);
  }
  CHECK_THROWS_AS(induced_shift_quantum(30.0, model(-20.0)), InvalidArgument);
}

TEST_CASE("doubly occupied modes vanish as 1/L") {
  const auto m = model(-20.0);
  const double L = 251.32;
  CHECK(doubly_occupied_prob(L, 0.0, m) == 0.0);
  const double p1 = doubly_occupied_prob(L, 200.0, m);
  const double p2 = doubly_occupied_prob(2 * L, 200.0, m);
  CHECK(p2 / p1 == doctest::Approx(0.5).epsilon(0.02));
  double prev = p1;
  for (double f : {2.0, 4.0, 8.0}) {
    const double p = doubly_occupied_prob(f * L, 200.0, m);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("pairs of singly occupied modes approach the continuum") {
  const auto m = model(-20.0);
  const double cont = prob_ground(200.0, m).value;
  const double L = 251.32;
  CHECK(pairs_singly_occupied_prob(L, 200.0, m, true) == doctest::Approx(cont).epsilon(0.02));
  CHECK(pairs_singly_occupied_prob(2 * L, 200.0, m, true) == doctest::Approx(cont).epsilon(0.02));
  double prev_gap = 1.0;
  for (double f : {1.0, 2.0, 4.0, 8.0}) {
    const double gap = std::abs(pairs_singly_occupied_prob(f * L, 200.0, m) - cont);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.01 * cont);
  const auto k = mode_wavenumbers(L, m);
  CHECK(k.front() >= -4.0);
  CHECK(k.back() <= 4.0);
  CHECK(k.back() + 2.0 * pi / L > 4.0);
  CHECK(k[1] - k[0] == doctest::Approx(2.0 * pi / L));
}
