#include "rydion/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <array>

namespace rydion {

namespace {
constexpr std::array<const char*, kLevels> kLabels = {"q1", "q0", "e",
                                                      "s",  "p",  "g"};
}

int level_index(Level l) { return static_cast<int>(l); }

Level level_from_label(std::string_view label) {
  for (int i = 0; i < kLevels; ++i) {
    if (label == kLabels[static_cast<size_t>(i)]) return static_cast<Level>(i);
  }
  // Accept the qubit aliases used in configs.
  if (label == "0") return Level::q0;
  if (label == "1") return Level::q1;
  throw ConfigError("unknown level label: '" + std::string(label) + "'");
}

std::string level_label(Level l) {
  return kLabels[static_cast<size_t>(level_index(l))];
}

void LevelScheme::validate() const {
  if (gamma_e < 0 || gamma_s < 0 || gamma_p < 0)
    throw ConfigError("decay rates must be >= 0");
}

Operator::Operator(Matrix m) : dim_(static_cast<int>(m.rows())), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw ConfigError("operator matrix must be square");
  if (!m_.allFinite()) throw NumericalError("operator has non-finite entries");
}

Operator::Operator(int dim, Matrix m) : Operator(std::move(m)) {
  if (dim_ != dim) throw ConfigError("operator dimension mismatch");
}

Operator Operator::zero(int dim) { return Operator(Matrix::Zero(dim, dim)); }

Operator Operator::identity(int dim) {
  return Operator(Matrix::Identity(dim, dim));
}

bool Operator::is_hermitian(double rel_tol) const {
  double scale = m_.norm();
  if (scale == 0.0) return true;
  return (m_ - m_.adjoint()).norm() <= rel_tol * scale;
}

Operator Operator::operator+(const Operator& o) const {
  if (dim_ != o.dim_) throw ConfigError("operator dimension mismatch in +");
  return Operator(m_ + o.m_);
}

Operator Operator::operator-(const Operator& o) const {
  if (dim_ != o.dim_) throw ConfigError("operator dimension mismatch in -");
  return Operator(m_ - o.m_);
}

Operator Operator::operator*(const Operator& o) const {
  if (dim_ != o.dim_) throw ConfigError("operator dimension mismatch in *");
  return Operator(m_ * o.m_);
}

Operator Operator::operator*(Complex c) const { return Operator(m_ * c); }

Operator operator*(Complex c, const Operator& o) { return o * c; }

Operator projector(Level a, Level b) {
  Matrix m = Matrix::Zero(kLevels, kLevels);
  m(level_index(a), level_index(b)) = 1.0;
  return Operator(std::move(m));
}

Operator projector(std::string_view a, std::string_view b) {
  return projector(level_from_label(a), level_from_label(b));
}

Operator tensor(const Operator& a, const Operator& b) {
  const auto da = a.dim(), db = b.dim();
  if (static_cast<long>(da) * db > kMaxTensorDim)
    throw ConfigError("tensor product dimension exceeds guard (10^4)");
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  return Operator(std::move(out));
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityState DensityState::pure(const Vector& psi) {
  double n2 = psi.squaredNorm();
  if (n2 <= 0) throw ConfigError("cannot build a state from the zero vector");
  DensityState st;
  st.dim = static_cast<int>(psi.size());
  st.rho = (psi * psi.adjoint()) / n2;
  return st;
}

DensityState DensityState::maximally_mixed(int dim) {
  DensityState st;
  st.dim = dim;
  st.rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return st;
}

double DensityState::trace_error() const {
  return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double DensityState::hermiticity_error() const {
  double scale = rho.norm();
  if (scale == 0.0) return 0.0;
  return (rho - rho.adjoint()).norm() / scale;
}

double DensityState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityState::validate(double trace_tol, double herm_tol,
                            double eig_floor) const {
  if (trace_error() > trace_tol)
    throw NumericalError("density matrix trace deviates from 1", trace_error());
  if (hermiticity_error() > herm_tol)
    throw NumericalError("density matrix is not Hermitian",
                         hermiticity_error());
  double lo = min_eigenvalue();
  if (lo < eig_floor)
    throw NumericalError("density matrix has a negative eigenvalue", lo);
}

Complex expectation(const DensityState& state, const Operator& obs) {
  if (state.dim != obs.dim())
    throw ConfigError("state/observable dimension mismatch");
  return (state.rho * obs.matrix()).trace();
}

double expectation_real(const DensityState& state, const Operator& obs) {
  return expectation(state, obs).real();
}

}  // namespace rydion
