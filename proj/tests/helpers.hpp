#pragma once

#include <random>

#include "rydion/qcore.hpp"

namespace rydion::testing {

inline std::mt19937_64 rng(std::uint64_t seed = 12345) {
  return std::mt19937_64(seed);
}

inline Matrix random_matrix(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(u(gen), u(gen));
  return m;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& gen) {
  Matrix m = random_matrix(dim, gen);
  return 0.5 * (m + m.adjoint());
}

inline Vector random_vector(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(u(gen), u(gen));
  return v / v.norm();
}

// Random valid density matrix (mixture of a few random pure states).
inline DensityState random_density(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Matrix rho = Matrix::Zero(dim, dim);
  double total = 0;
  for (int k = 0; k < 4; ++k) {
    const Vector v = random_vector(dim, gen);
    const double w = u(gen);
    rho += w * (v * v.adjoint());
    total += w;
  }
  DensityState st;
  st.dim = dim;
  st.rho = rho / total;
  return st;
}

}  // namespace rydion::testing
