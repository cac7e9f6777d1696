// Thin wrapper over Boost.Odeint's controlled Dormand-Prince 5(4) stepper.
// Every call owns its stepper and state, so concurrent calls are independent.

#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "photonkin/errors.hpp"

namespace photonkin {

struct OdeOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  /// Maximum number of steps between two consecutive output times.
  int max_steps = 1'000'000;
};

/// Integrate dx/dt = rhs(x, t) from times.front() and return the state at
/// every entry of `times` (which must be increasing). Step-size failures are
/// rethrown as SolverError tagged with `module`.
template <class State, class Rhs>
std::vector<State> integrate_at(Rhs rhs, State x0, std::span<const double> times,
                                const OdeOptions& opt, const std::string& module) {
  namespace odeint = boost::numeric::odeint;
  if (times.empty()) return {};
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw InvalidArgument(module + ": output times must be strictly increasing");
    }
  }
  std::vector<State> out;
  out.reserve(times.size());
  if (times.size() == 1) {
    out.push_back(std::move(x0));
    return out;
  }
  auto system = [&rhs](const State& x, State& dxdt, double t) { rhs(x, dxdt, t); };
  auto observer = [&out](const State& x, double) { out.push_back(x); };
  auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_times(stepper, system, x0, times.begin(), times.end(),
                            opt.initial_step, observer,
                            odeint::max_step_checker(opt.max_steps));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw SolverError(module, std::string("ODE integration failed: ") + e.what());
  }
  if (out.size() != times.size()) {
    throw SolverError(module, "ODE integration stopped early");
  }
  return out;
}

}  // namespace photonkin
