#include "photonkin/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace photonkin::app {

namespace {

std::string with_line(const std::string& what, const std::string& field, unsigned long line) {
  std::string s;
  if (line > 0) s += "line " + std::to_string(line) + ": ";
  if (!field.empty()) s += field + ": ";
  return s + what;
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  const char* b = v.data();
  const char* e = b + v.size();
  auto [p, ec] = std::from_chars(b, e, x);
  if (ec != std::errc() || p != e) throw ConfigError("expected a number, got '" + v + "'", key);
  return x;
}

std::size_t to_size(const std::string& key, const std::string& v) {
  std::size_t x = 0;
  const char* b = v.data();
  const char* e = b + v.size();
  auto [p, ec] = std::from_chars(b, e, x);
  if (ec != std::errc() || p != e) {
    throw ConfigError("expected a non-negative integer, got '" + v + "'", key);
  }
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected true/false, got '" + v + "'", key);
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> m{
      {"physics.gamma", [](RunConfig& c, const std::string& v) { c.physics.gamma = to_double("physics.gamma", v); }},
      {"physics.kappa", [](RunConfig& c, const std::string& v) { c.physics.kappa = to_double("physics.kappa", v); }},
      {"physics.lambda", [](RunConfig& c, const std::string& v) { c.physics.lambda = to_double("physics.lambda", v); }},
      {"physics.L", [](RunConfig& c, const std::string& v) { c.physics.L = to_double("physics.L", v); }},
      {"physics.N", [](RunConfig& c, const std::string& v) { c.physics.N = to_size("physics.N", v); }},
      {"numerics.k_min", [](RunConfig& c, const std::string& v) { c.numerics.k_min = to_double("numerics.k_min", v); }},
      {"numerics.k_max", [](RunConfig& c, const std::string& v) { c.numerics.k_max = to_double("numerics.k_max", v); }},
      {"numerics.rel_tol", [](RunConfig& c, const std::string& v) { c.numerics.rel_tol = to_double("numerics.rel_tol", v); }},
      {"numerics.t_end", [](RunConfig& c, const std::string& v) { c.numerics.t_end = to_double("numerics.t_end", v); }},
      {"numerics.t_points", [](RunConfig& c, const std::string& v) { c.numerics.t_points = to_size("numerics.t_points", v); }},
      {"numerics.mode_t_end", [](RunConfig& c, const std::string& v) { c.numerics.mode_t_end = to_double("numerics.mode_t_end", v); }},
      {"numerics.mode_t_points", [](RunConfig& c, const std::string& v) { c.numerics.mode_t_points = to_size("numerics.mode_t_points", v); }},
      {"numerics.first_order_t", [](RunConfig& c, const std::string& v) { c.numerics.first_order_t = to_double("numerics.first_order_t", v); }},
      {"numerics.first_order_T_min", [](RunConfig& c, const std::string& v) { c.numerics.first_order_T_min = to_double("numerics.first_order_T_min", v); }},
      {"numerics.first_order_T_max", [](RunConfig& c, const std::string& v) { c.numerics.first_order_T_max = to_double("numerics.first_order_T_max", v); }},
      {"numerics.first_order_T_step", [](RunConfig& c, const std::string& v) { c.numerics.first_order_T_step = to_double("numerics.first_order_T_step", v); }},
      {"numerics.first_order_rel_tol", [](RunConfig& c, const std::string& v) { c.numerics.first_order_rel_tol = to_double("numerics.first_order_rel_tol", v); }},
      {"numerics.first_order_form",
       [](RunConfig& c, const std::string& v) {
         if (v == "as-printed") c.numerics.first_order_form = first_order::KernelForm::AsPrinted;
         else if (v == "rederived") c.numerics.first_order_form = first_order::KernelForm::Rederived;
         else if (v == "g-symmetrized") c.numerics.first_order_form = first_order::KernelForm::GSymmetrized;
         else throw ConfigError("expected as-printed, rederived or g-symmetrized, got '" + v + "'",
                                "numerics.first_order_form");
       }},
      {"numerics.first_order_upper",
       [](RunConfig& c, const std::string& v) {
         if (v == "k") c.numerics.first_order_upper = first_order::UpperLimit::AtK;
         else if (v == "whole-line") c.numerics.first_order_upper = first_order::UpperLimit::WholeLine;
         else throw ConfigError("expected k or whole-line, got '" + v + "'", "numerics.first_order_upper");
       }},
      {"numerics.rate_normalization",
       [](RunConfig& c, const std::string& v) {
         if (v == "ansatz") c.numerics.rate_normalization = ww::RateNormalization::AnsatzPopulation;
         else if (v == "one-minus-ground") c.numerics.rate_normalization = ww::RateNormalization::OneMinusGround;
         else throw ConfigError("expected ansatz or one-minus-ground, got '" + v + "'", "numerics.rate_normalization");
       }},
      {"numerics.omega_min", [](RunConfig& c, const std::string& v) { c.numerics.omega_min = to_double("numerics.omega_min", v); }},
      {"numerics.omega_max", [](RunConfig& c, const std::string& v) { c.numerics.omega_max = to_double("numerics.omega_max", v); }},
      {"output.dir", [](RunConfig& c, const std::string& v) { c.output.dir = v; }},
      {"output.svg", [](RunConfig& c, const std::string& v) { c.output.svg = to_bool("output.svg", v); }},
  };
  return m;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value,
             unsigned long line) {
  const auto& m = setters();
  const auto it = m.find(key);
  if (it == m.end()) throw ConfigError("unknown key", key, line);
  try {
    it->second(cfg, value);
  } catch (const ConfigError& e) {
    if (line == 0) throw;
    throw ConfigError(e.message(), key, line);
  }
}

// Line numbers are not kept by the property tree; recover them from the text.
unsigned long find_line(const std::string& text, const std::string& section,
                        const std::string& key) {
  std::istringstream in(text);
  std::string s, current;
  unsigned long n = 0;
  while (std::getline(in, s)) {
    ++n;
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    s = s.substr(b);
    if (s[0] == '[') {
      current = s.substr(1, s.find(']') - 1);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) continue;
    auto k = s.substr(0, eq);
    k.erase(k.find_last_not_of(" \t") + 1);
    if (current == section && k == key) return n;
  }
  return 0;
}

}  // namespace

ConfigError::ConfigError(const std::string& what, std::string field, unsigned long line)
    : Error(with_line(what, field, line)), message_(what), field_(std::move(field)), line_(line) {}

void RunConfig::validate() const {
  const auto& p = physics;
  const auto& n = numerics;
  if (!(p.gamma > 0.0)) throw ConfigError("must be positive", "physics.gamma");
  if (!(p.kappa > 0.0)) throw ConfigError("must be positive", "physics.kappa");
  if (!(p.lambda < 0.0) || !std::isfinite(p.lambda)) {
    throw ConfigError("must be finite and negative (packet arrives at t = -lambda)",
                      "physics.lambda");
  }
  if (!(p.L > 0.0)) throw ConfigError("must be positive", "physics.L");
  if (p.N < 3 || p.N % 2 == 0) throw ConfigError("must be odd and >= 3", "physics.N");
  if (!(n.k_max > n.k_min)) throw ConfigError("must exceed numerics.k_min", "numerics.k_max");
  if (!(n.rel_tol > 0.0)) throw ConfigError("must be positive", "numerics.rel_tol");
  if (!(n.first_order_rel_tol > 0.0)) {
    throw ConfigError("must be positive", "numerics.first_order_rel_tol");
  }
  if (!(n.t_end > 0.0)) throw ConfigError("must be positive", "numerics.t_end");
  if (n.t_points < 3) throw ConfigError("must be >= 3", "numerics.t_points");
  if (!(n.mode_t_end > 0.0)) throw ConfigError("must be positive", "numerics.mode_t_end");
  if (n.mode_t_points < 3) throw ConfigError("must be >= 3", "numerics.mode_t_points");
  if (!(n.first_order_t > 0.0)) throw ConfigError("must be positive", "numerics.first_order_t");
  if (!(n.first_order_T_min > 0.0) || !(n.first_order_T_max >= n.first_order_T_min)) {
    throw ConfigError("need 0 < T_min <= T_max", "numerics.first_order_T_min");
  }
  if (!(n.first_order_T_step > 0.0)) {
    throw ConfigError("must be positive", "numerics.first_order_T_step");
  }
  if (!(n.omega_min >= 0.0) || !(n.omega_max > n.omega_min)) {
    throw ConfigError("need 0 <= omega_min < omega_max", "numerics.omega_min");
  }
  if (output.dir.empty()) throw ConfigError("must not be empty", "output.dir");
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.message(), {}, e.line());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key outside a section", section, find_line(text, "", section));
    }
    if (section != "physics" && section != "numerics" && section != "output") {
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      set_key(base, section + "." + key, value.data(), find_line(text, section, key));
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set expects section.key=value, got '" + assignment + "'");
  }
  set_key(cfg, assignment.substr(0, eq), assignment.substr(eq + 1), 0);
}

std::string default_config_text() {
  return R"([physics]
gamma = 0.0125
kappa = 0.25
; hit run; the miss reference sits at -lambda
lambda = -20
L = 251.32
N = 159

[numerics]
k_min = -4
k_max = 4
rel_tol = 1e-6
t_end = 400
t_points = 4001
mode_t_end = 200
mode_t_points = 2001
first_order_t = 400
first_order_T_min = 20
first_order_T_max = 130
first_order_T_step = 10
first_order_rel_tol = 1e-6
; as-printed | rederived | g-symmetrized
first_order_form = as-printed
; k | whole-line
first_order_upper = k
; ansatz | one-minus-ground
rate_normalization = ansatz
omega_min = 0.05
omega_max = 3

[output]
dir = out
svg = false
)";
}

}  // namespace photonkin::app
