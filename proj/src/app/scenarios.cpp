#include "photonkin/app/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "photonkin/app/output.hpp"
#include "photonkin/mode_ode.hpp"
#include "photonkin/semiclassical.hpp"
#include "photonkin/spectrum.hpp"
#include "photonkin/units.hpp"

namespace photonkin::app {

namespace {

namespace fs = std::filesystem;

struct Context {
  const RunConfig& cfg;
  Manifest& manifest;

  std::string path(const std::string& name) const {
    return (fs::path(cfg.output.dir) / name).string();
  }
  void csv(const std::string& name, const std::vector<Column>& cols) {
    write_csv(path(name), cols);
    manifest.files.push_back(path(name));
  }
  void svg(const std::string& name, const PlotSpec& spec, const std::vector<double>& x,
           const std::vector<Series>& series) {
    if (!cfg.output.svg) return;
    write_svg(path(name), spec, x, series);
    manifest.files.push_back(path(name));
  }
  void text(const std::string& name, const std::string& body) {
    std::ofstream f(path(name), std::ios::binary);
    if (!f) throw Error("cannot write '" + path(name) + "'");
    f << body;
    manifest.files.push_back(path(name));
  }
  void line(std::string label, double computed, std::optional<double> reference = {},
            std::string note = {}) {
    manifest.summary.push_back({std::move(label), computed, reference, std::move(note)});
  }
};

double arrival(const RunConfig& cfg) { return -cfg.physics.lambda; }

TimeGrid time_grid(const RunConfig& cfg) {
  return {0.0, cfg.numerics.t_end, cfg.numerics.t_points};
}

double rate_window_end(const RunConfig& cfg) {
  return std::min(cfg.numerics.t_end, arrival(cfg) + 10.0 / cfg.physics.kappa);
}

void fig1(Context& c) {
  const auto& cfg = c.cfg;
  const auto hit = make_ww_model(cfg, cfg.physics.lambda);
  const auto miss = make_ww_model(cfg, -cfg.physics.lambda);
  const auto grid = time_grid(cfg);
  const auto th = ww::kinetics_trace(hit, grid);
  const auto tm = ww::kinetics_trace(miss, grid);
  c.csv("fig1.csv", {{"t", th.times}, {"p_minus_hit", th.p_minus}, {"p_minus_miss", tm.p_minus}});
  c.svg("fig1.svg", {"Ground-state probability", "t", "P-"}, th.times,
        {{fmt::format("lambda = {}", cfg.physics.lambda), th.p_minus},
         {fmt::format("lambda = {}", -cfg.physics.lambda), tm.p_minus, true}});
  const auto s = ww::induced_shift_quantum(arrival(cfg), hit);
  c.line("Delta P(T) numerical, -(P-hit - P-miss) at t = 400", s.numerical, -0.076);
  c.line("Delta P(T) closed form -sqrt(2 pi)(gamma/delta) e^{-2 gamma T}", s.closed_form, -0.076);
  c.line("P- miss at t = 400", s.p_minus_miss, std::nullopt,
         fmt::format("1 - e^(-2 gamma t) = {:.6f}",
                     -std::expm1(-2.0 * cfg.physics.gamma * ww::kAsymptoticTime)));
}

void fig2(Context& c) {
  const auto& cfg = c.cfg;
  const auto hit = make_ww_model(cfg, cfg.physics.lambda);
  const auto tr = ww::kinetics_trace(hit, time_grid(cfg));
  const double g = cfg.physics.gamma;
  const auto ans = ww::decay_rate(tr, {ww::RateNormalization::AnsatzPopulation, g});
  const auto omg = ww::decay_rate(tr, {ww::RateNormalization::OneMinusGround, g});
  c.csv("fig2.csv", {{"t", tr.times},
                     {"gamma_ansatz", ans.rate},
                     {"gamma_one_minus_ground", omg.rate},
                     {"spontaneous_rate", std::vector<double>(tr.size(), 2.0 * g)}});
  c.svg("fig2.svg", {"Decay rate", "t", "Gamma"}, tr.times,
        {{"dP-/dt / e^{-2 gamma t}", ans.rate},
         {"-dP+/dt / (1 - P-)", omg.rate},
         {"2 gamma", std::vector<double>(tr.size(), 2.0 * g), true}});
  const double hi = rate_window_end(cfg);
  const bool ansatz = cfg.numerics.rate_normalization == ww::RateNormalization::AnsatzPopulation;
  const auto p = ww::rate_peak(ansatz ? ans : omg, 0.0, hi);
  const auto q = ww::rate_peak(ansatz ? omg : ans, 0.0, hi);
  const std::string alt = ansatz ? "1 - P- normalisation" : "ansatz normalisation";
  c.line("Gamma peak time", p.time, 21.6);
  c.line("Gamma peak / 2 gamma", p.rate / (2.0 * g), 1.94);
  c.line("Gamma peak time, " + alt, q.time, 21.6);
  c.line("Gamma peak / 2 gamma, " + alt, q.rate / (2.0 * g), 1.94);
}

void fig3(Context& c) {
  const auto& cfg = c.cfg;
  const auto& ph = cfg.physics;
  const auto sys = mode_ode::build_mode_system(ph.L, ph.N, ph.gamma);
  const TimeGrid grid(0.0, cfg.numerics.mode_t_end, cfg.numerics.mode_t_points);
  const PacketSpec packet(ph.kappa, ph.lambda);
  const auto r = mode_ode::scatter_on_ground_state(sys, packet, grid);
  std::vector<double> fit(r.trace.size());
  for (std::size_t i = 0; i < fit.size(); ++i) {
    fit[i] = r.fitted_p_plus * std::exp(-2.0 * ph.gamma * (r.trace.times[i] - r.peak_time));
  }
  c.csv("fig3.csv", {{"t", r.trace.times}, {"p_plus", r.trace.p_plus}, {"p_plus_fit", fit}});
  c.svg("fig3.svg", {"Ground-state atom, mode ODE", "t", "P+ = |A|^2"}, r.trace.times,
        {{"|A|^2", r.trace.p_plus}, {"fitted decay", fit, true}});

  const auto dv = mode_ode::integrate_modes(sys, mode_ode::excited_vacuum(sys), grid);
  const auto f = mode_ode::fit_decay_rate(dv, 5.0, std::min(150.0, grid.t_end()));
  const double semi = semiclassical::induced_shift_1d(-1.0, ph.gamma, ph.kappa);
  c.line("Delta P+(inf), decay tail referenced to the P+ peak", r.fitted_p_plus, 0.105);
  c.line("P+ raw maximum", r.peak_p_plus, 0.105, fmt::format("at t = {:.4g}", r.peak_time));
  c.line("Decay tail extrapolated to the arrival time", r.p_plus_at_arrival);
  c.line("Semiclassical shift at w = -1", semi, 0.125);
  c.line("Ratio Delta P+(inf) / semiclassical", r.fitted_p_plus / semi);
  c.line("Spontaneous decay rate fit (mode ODE)", f.rate, 2.0 * ph.gamma);
  c.line("Norm drift, excited-atom run", dv.max_norm_drift());
  c.line("Packet mass outside the modes", r.discarded_mass);
}

void spectrum_scenario(Context& c, bool ratio_only) {
  const auto& cfg = c.cfg;
  const auto model = make_ww_model(cfg, cfg.physics.lambda);
  const auto grid =
      spectrum::frequency_grid(cfg.physics.gamma, cfg.numerics.omega_min, cfg.numerics.omega_max);
  const auto r = spectrum::spectrum_report(model, grid);
  if (ratio_only) {
    c.csv("fig5.csv", {{"omega", r.omega}, {"R", r.ratio}});
    c.svg("fig5.svg", {"Spectral density ratio", "omega", "R = S/S0"}, r.omega,
          {{"S/S0", r.ratio}, {"1", std::vector<double>(r.omega.size(), 1.0), true}});
    const auto [lo, hi] = std::minmax_element(r.ratio.begin(), r.ratio.end());
    c.line("R minimum", *lo);
    c.line("R maximum", *hi);
  } else {
    c.csv("fig4.csv", {{"omega", r.omega}, {"S", r.s}, {"S0", r.s0}});
    c.svg("fig4.svg", {"Final photon spectrum", "omega", "density"}, r.omega,
          {{"S", r.s}, {"S0", r.s0, true}});
  }
  c.line("Half-mass width of S", r.width_s.length());
  c.line("Half-mass width of S0", r.width_s0.length());
  c.line("Relative broadening (|I_S| - |I_S0|)/|I_S0|", r.broadening, 0.11);
  c.line("Mass of S on the grid", r.mass_s, std::nullopt, "expected 2 P-(inf)");
  c.line("Mass of S0 on the grid", r.mass_s0);
}

void semiclassical_table(Context& c) {
  using namespace semiclassical;
  const auto ex = PhysicalExample::reference();
  const auto r = cgs_report(ex);
  struct Row {
    const char* name;
    double value;
    double reference;
  };
  const Row rows[] = {
      {"Gamma1 [s^-1]", r.gamma1, 1.34e7},
      {"E0 [Gs]", r.field_amplitude, 1.18e-5},
      {"Omega0 [s^-1]", r.rabi_peak, 2.56e4},
      {"sigma0 [cm^2]", r.cross_section, 1.35e-9},
  };
  std::string t = "quantity,computed,reference,rel_dev\n";
  for (const auto& row : rows) {
    t += fmt::format("{},{},{},{}\n", row.name, format_number(row.value), format_number(row.reference),
                     format_number((row.value - row.reference) / row.reference));
    c.line(row.name, row.value, row.reference);
  }
  c.text("semiclassical_table.csv", t);

  std::string s = "route,max_abs_shift,quoted_over_value,inconsistent\n";
  for (const auto& row : shift_comparison(r, ex.area_cm2)) {
    s += fmt::format("\"{}\",{},{},{}\n", row.route, format_number(row.value),
                     format_number(row.ratio_to_quoted), row.inconsistent ? 1 : 0);
    c.line("max|Delta P+| " + row.route, row.value, kQuotedMaxShift,
           fmt::format("quoted/value = {:.3f}{}", row.ratio_to_quoted,
                       row.inconsistent ? " INCONSISTENT" : ""));
  }
  c.text("semiclassical_shifts.csv", s);
}

void shift_table(Context& c) {
  const auto& cfg = c.cfg;
  const auto& n = cfg.numerics;
  const double g = cfg.physics.gamma;
  const double kappa = cfg.physics.kappa;
  std::vector<double> Ts;
  for (double T = n.first_order_T_min; T <= n.first_order_T_max + 1e-9; T += n.first_order_T_step) {
    Ts.push_back(T);
  }
  const auto fo = make_first_order_model(cfg, cfg.physics.lambda);
  std::vector<double> d1, hit, miss, d0, dsc;
  for (double T : Ts) {
    const auto s = first_order::induced_shift_first_order(T, fo, n.first_order_t);
    d1.push_back(s.shift);
    hit.push_back(s.p_plus_hit);
    miss.push_back(s.p_plus_miss);
    d0.push_back(-std::sqrt(2.0 * pi) * (g / kappa) * std::exp(-2.0 * g * T));
    const double w_T = -1.0 + 2.0 * std::exp(-2.0 * g * T);
    dsc.push_back(semiclassical::induced_shift_1d(w_T, g, kappa));
  }
  c.csv("shift_table.csv", {{"T", Ts},
                            {"dP_plus_first_order", d1},
                            {"p_plus_hit", hit},
                            {"p_plus_miss", miss},
                            {"dP_zeroth_order", d0},
                            {"dP_semiclassical", dsc}});
  c.svg("shift_table.svg", {"Induced shift vs arrival time", "T", "Delta P+"}, Ts,
        {{"first order", d1}, {"zeroth order", d0, true}, {"semiclassical", dsc, true}});
  int changes = 0;
  for (std::size_t i = 1; i < d1.size(); ++i) {
    if ((d1[i - 1] < 0.0) != (d1[i] < 0.0)) ++changes;
  }
  c.line(fmt::format("Delta P+({:g}) first order", Ts.front()), d1.front(), -0.059);
  c.line(fmt::format("Delta P+({:g}) first order", Ts.back()), d1.back(), std::nullopt,
         "expected positive, order 1e-3");
  c.line("Sign changes over the T scan", changes, 1.0);
  c.line(fmt::format("P+ hit at T = {:g}", Ts.front()), hit.front());
  c.line(fmt::format("Semiclassical Delta P+({:g})", Ts.front()), dsc.front(), -0.027);
}

void scaling_check(Context& c) {
  const auto& cfg = c.cfg;
  const double t = cfg.numerics.mode_t_end;
  const auto model = make_ww_model(cfg, cfg.physics.lambda);
  const double cont = ww::prob_ground(t, model).value;
  std::vector<double> Ls, p2, p2L, off, full, ref;
  for (double f : {1.0, 2.0, 4.0, 8.0}) {
    const double L = f * cfg.physics.L;
    Ls.push_back(L);
    p2.push_back(ww::doubly_occupied_prob(L, t, model));
    p2L.push_back(p2.back() * L);
    off.push_back(ww::pairs_singly_occupied_prob(L, t, model, false));
    full.push_back(ww::pairs_singly_occupied_prob(L, t, model, true));
    ref.push_back(cont);
  }
  c.csv("scaling_check.csv", {{"L", Ls},
                              {"P2", p2},
                              {"P2_times_L", p2L},
                              {"P11_offdiagonal", off},
                              {"P11_with_diagonal", full},
                              {"P_minus_continuum", ref}});
  c.line("P2(2L)/P2(L)", p2[1] / p2[0], std::nullopt, "expected 0.5 for 1/L scaling");
  c.line("P11 with diagonal / continuum P-", full[0] / cont, std::nullopt, "expected 1");
  c.line("P11 off-diagonal / continuum P-", off[0] / cont, std::nullopt,
         "expected 1 - O(1/L); the gap is the diagonal");
}

}  // namespace

std::string Manifest::summary_text() const {
  std::string o = "scenario " + scenario + "\n";
  for (const auto& l : summary) {
    o += "  " + l.label + ": computed " + format_number(l.computed);
    if (l.reference) {
      const double abs_dev = l.computed - *l.reference;
      o += " | reference " + format_number(*l.reference) + " | abs dev " + format_number(abs_dev);
      if (*l.reference != 0.0) o += " | rel dev " + fmt::format("{:+.2f}%", 100.0 * abs_dev / *l.reference);
    }
    if (!l.note.empty()) o += " (" + l.note + ")";
    o += '\n';
  }
  for (const auto& f : files) o += "  wrote " + f + '\n';
  return o;
}

ww::WWModel make_ww_model(const RunConfig& cfg, double lambda) {
  const AtomSpec atom(cfg.physics.gamma);
  const PacketSpec packet(cfg.physics.kappa, lambda);
  auto q = QuadratureConfig::for_model(atom, packet);
  q.k_min = cfg.numerics.k_min;
  q.k_max = cfg.numerics.k_max;
  q.rel_tol = cfg.numerics.rel_tol;
  return {atom, packet, q};
}

first_order::FirstOrderModel make_first_order_model(const RunConfig& cfg, double lambda) {
  first_order::FirstOrderModel m(AtomSpec(cfg.physics.gamma),
                                 PacketSpec(cfg.physics.kappa, lambda), cfg.physics.L);
  m.quad.k_min = cfg.numerics.k_min;
  m.quad.k_max = cfg.numerics.k_max;
  m.quad.rel_tol = cfg.numerics.first_order_rel_tol;
  m.form = cfg.numerics.first_order_form;
  m.upper = cfg.numerics.first_order_upper;
  m.validate();
  return m;
}

Manifest run(const RunConfig& cfg) {
  cfg.validate();
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"fig1", fig1},
      {"fig2", fig2},
      {"fig3", fig3},
      {"fig4", [](Context& c) { spectrum_scenario(c, false); }},
      {"fig5", [](Context& c) { spectrum_scenario(c, true); }},
      {"semiclassical-table", semiclassical_table},
      {"shift-table", shift_table},
      {"scaling-check", scaling_check},
  };
  const auto it = table.find(cfg.scenario);
  if (it == table.end()) throw ConfigError("unknown scenario '" + cfg.scenario + "'", "scenario");
  std::error_code ec;
  fs::create_directories(cfg.output.dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + ec.message(), "output.dir");

  Manifest m;
  m.scenario = cfg.scenario;
  Context c{cfg, m};
  it->second(c);
  std::string name = cfg.scenario;
  std::replace(name.begin(), name.end(), '-', '_');
  const auto summary_path = c.path(name + "_summary.txt");
  m.files.push_back(summary_path);
  std::ofstream f(summary_path, std::ios::binary);
  f << m.summary_text();
  return m;
}

std::string csv_schemas() {
  return R"(CSV schemas (header row, then one row per sample; 12 significant digits):
  fig1                 t, p_minus_hit, p_minus_miss
  fig2                 t, gamma_ansatz, gamma_one_minus_ground, spontaneous_rate
                       (rates are NaN where the denominator drops below 1e-6)
  fig3                 t, p_plus, p_plus_fit
  fig4                 omega, S, S0
  fig5                 omega, R
  semiclassical-table  semiclassical_table.csv: quantity, computed, reference, rel_dev
                       semiclassical_shifts.csv: route, max_abs_shift, quoted_over_value, inconsistent
  shift-table          T, dP_plus_first_order, p_plus_hit, p_plus_miss, dP_zeroth_order,
                       dP_semiclassical
  scaling-check        L, P2, P2_times_L, P11_offdiagonal, P11_with_diagonal, P_minus_continuum
Every scenario also writes <scenario>_summary.txt (dashes as underscores) with computed vs
reference values.)";
}

}  // namespace photonkin::app
