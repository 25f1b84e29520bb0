#pragma once

#include <stdexcept>
#include <string>

namespace rydion {

// Bad input / bad configuration: maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (integrator tolerance, non-convergence): CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double worst_error = 0.0)
      : std::runtime_error(what), worst_error_(worst_error) {}
  double worst_error() const { return worst_error_; }

 private:
  double worst_error_;
};

}  // namespace rydion
