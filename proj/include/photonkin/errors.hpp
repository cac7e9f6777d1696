#pragma once

#include <stdexcept>
#include <string>

namespace photonkin {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters handed to a constructor or operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not meet its tolerance. `module` names the
/// solver that failed so the CLI can report provenance.
class SolverError : public Error {
 public:
  SolverError(std::string module, const std::string& what)
      : Error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Adaptive quadrature ran out of panels before reaching the target error.
class QuadratureError : public SolverError {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : SolverError("quadrature", what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace photonkin
