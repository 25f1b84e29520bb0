#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>

#include "rydion/errors.hpp"

namespace rydion {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Fixed level ordering for the six-level ion. Collapse-operator construction
// and all embeddings depend on this order; do not reorder.
enum class Level : int { q1 = 0, q0 = 1, e = 2, s = 3, p = 4, g = 5 };

inline constexpr int kLevels = 6;
inline constexpr int kMaxTensorDim = 10000;

int level_index(Level l);
Level level_from_label(std::string_view label);  // throws ConfigError
std::string level_label(Level l);

// Decay rates of the three unstable levels, rad/us. Each decay branches
// equally into |q1> and |g> (both sublevels of the electronic ground state).
struct LevelScheme {
  double gamma_e = 0.0;
  double gamma_s = 0.0;
  double gamma_p = 0.0;

  static constexpr double branching_q1 = 0.5;
  static constexpr double branching_g = 0.5;

  void validate() const;
};

// Dense complex square matrix with dimension metadata. Hamiltonian-like
// operators carry rad/us entries; collapse operators carry (rad/us)^(1/2).
class Operator {
 public:
  Operator() : dim_(0) {}
  explicit Operator(Matrix m);
  Operator(int dim, Matrix m);

  static Operator zero(int dim);
  static Operator identity(int dim);

  int dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  Operator dagger() const { return Operator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }
  bool is_hermitian(double rel_tol = 1e-12) const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator*(const Operator& o) const;  // matrix product
  Operator operator*(Complex c) const;

 private:
  int dim_;
  Matrix m_;
};

Operator operator*(Complex c, const Operator& o);

// |a><b| on the six-level space.
Operator projector(Level a, Level b);
Operator projector(std::string_view a, std::string_view b);

// Kronecker product; ion 1 is always the left factor.
Operator tensor(const Operator& a, const Operator& b);
Vector tensor(const Vector& a, const Vector& b);

// Two-ion density matrix (dim 36) or one-ion (dim 6).
struct DensityState {
  int dim = 0;
  Matrix rho;

  static DensityState pure(const Vector& psi);
  static DensityState maximally_mixed(int dim);

  double trace_error() const;           // |tr(rho) - 1|
  double hermiticity_error() const;     // rel. Frobenius
  double min_eigenvalue() const;
  void validate(double trace_tol = 1e-9, double herm_tol = 1e-12,
                double eig_floor = -1e-8) const;  // throws NumericalError
};

// tr(rho * obs); real part is the physical value for Hermitian obs.
Complex expectation(const DensityState& state, const Operator& obs);
double expectation_real(const DensityState& state, const Operator& obs);

}  // namespace rydion
