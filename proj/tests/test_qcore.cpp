#include "rydion/qcore.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace rydion;
namespace rt = rydion::testing;

namespace {

// Exchange the two tensor factors of a 36-dim operator matrix.
Matrix swap_ions(const Matrix& m) {
  Matrix p = Matrix::Zero(36, 36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) p(a * 6 + b, b * 6 + a) = 1.0;
  return p * m * p.adjoint();
}

}  // namespace

TEST_CASE("projector basics") {
  const Operator p00 = projector(Level::q0, Level::q0);
  CHECK(p00.dim() == 6);
  CHECK(p00.trace().real() == doctest::Approx(1.0));
  CHECK((p00 * p00 - p00).matrix().norm() == doctest::Approx(0.0));

  const Operator coupling =
      projector(Level::q0, Level::e) + projector(Level::e, Level::q0);
  CHECK(coupling.is_hermitian());

  const Operator lhs = projector(Level::s, Level::p) * projector(Level::p, Level::s);
  CHECK((lhs - projector(Level::s, Level::s)).matrix().norm() ==
        doctest::Approx(0.0));

  CHECK_THROWS_AS(projector("nope", "q0"), ConfigError);
  CHECK(level_from_label("0") == Level::q0);
  CHECK(level_from_label("1") == Level::q1);
}

TEST_CASE("level ordering is pinned") {
  CHECK(level_index(Level::q1) == 0);
  CHECK(level_index(Level::q0) == 1);
  CHECK(level_index(Level::e) == 2);
  CHECK(level_index(Level::s) == 3);
  CHECK(level_index(Level::p) == 4);
  CHECK(level_index(Level::g) == 5);
}

TEST_CASE("tensor identities") {
  const Operator i6 = Operator::identity(6);
  CHECK((tensor(i6, i6) - Operator::identity(36)).matrix().norm() ==
        doctest::Approx(0.0));

  auto gen = rt::rng(7);
  const Operator h(rt::random_matrix(6, gen));
  const Operator k(rt::random_matrix(6, gen));
  const Operator lhs = tensor(h, i6) * tensor(i6, k);
  CHECK((lhs - tensor(h, k)).matrix().norm() < 1e-12 * tensor(h, k).matrix().norm());
}

TEST_CASE("tensor mixed product and trace factorisation (property)") {
  auto gen = rt::rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator a(rt::random_matrix(6, gen));
    const Operator b(rt::random_matrix(6, gen));
    const Operator c(rt::random_matrix(6, gen));
    const Operator d(rt::random_matrix(6, gen));
    const Operator lhs = tensor(a, b) * tensor(c, d);
    const Operator rhs = tensor(a * c, b * d);
    CHECK((lhs - rhs).matrix().norm() < 1e-10 * rhs.matrix().norm());

    // Independent oracle: direct dense trace of the Kronecker product.
    const Complex t = tensor(a, b).trace();
    CHECK(std::abs(t - a.trace() * b.trace()) <
          1e-10 * std::abs(t) + 1e-12);
  }
}

TEST_CASE("tensor dimension guard") {
  const Operator big = Operator::identity(200);
  CHECK_THROWS_AS(tensor(big, big), ConfigError);
}

TEST_CASE("expectation values") {
  Vector v00 = Vector::Zero(36);
  v00[1 * 6 + 1] = 1.0;  // |q0 q0>
  const DensityState rho = DensityState::pure(v00);
  const Operator obs = tensor(projector(Level::q0, Level::q0),
                              projector(Level::q0, Level::q0));
  CHECK(expectation_real(rho, obs) == doctest::Approx(1.0));

  const DensityState mixed = DensityState::maximally_mixed(36);
  CHECK(expectation_real(mixed, obs) == doctest::Approx(1.0 / 36.0));

  auto gen = rt::rng(3);
  const DensityState any = rt::random_density(36, gen);
  const Operator herm(rt::random_hermitian(36, gen));
  CHECK(std::abs(expectation(any, herm).imag()) < 1e-10);

  CHECK_THROWS_AS(expectation(mixed, projector(Level::e, Level::e)),
                  ConfigError);
}

TEST_CASE("expectation of Bell-state parity matches qubit-subspace oracle") {
  // (|00> + i |11>)/sqrt(2) embedded in the 36-dim space.
  Vector bell = Vector::Zero(36);
  bell[1 * 6 + 1] = 1.0 / std::sqrt(2.0);             // |q0 q0>
  bell[0 * 6 + 0] = Complex(0.0, 1.0 / std::sqrt(2.0));  // |q1 q1>
  const DensityState rho = DensityState::pure(bell);

  // Parity at analyzer phase 0: apply exp(-i pi/4 sx) per qubit, then
  // P00 + P11 - P01 - P10. Oracle: brute-force in the 4-dim qubit space.
  Eigen::Matrix2cd r;
  const double s = 1.0 / std::sqrt(2.0);
  r << s, Complex(0, -s), Complex(0, -s), s;
  Eigen::Vector2cd q0(1, 0), q1(0, 1);
  Eigen::Vector4cd bell4 = Eigen::Vector4cd::Zero();
  bell4[0] = 1.0 / std::sqrt(2.0);                 // |00>
  bell4[3] = Complex(0.0, 1.0 / std::sqrt(2.0));   // |11>
  Eigen::Matrix4cd r2 = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          r2(a * 2 + b, c * 2 + d) = r(a, c) * r(b, d);
  const Eigen::Vector4cd rotated = r2 * bell4;
  double parity_oracle = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      parity_oracle += (a == b ? 1.0 : -1.0) * std::norm(rotated[a * 2 + b]);

  // Same computation through the 36-dim operators.
  Matrix r6 = Matrix::Identity(6, 6);
  r6(1, 1) = r(0, 0);
  r6(1, 0) = r(0, 1);
  r6(0, 1) = r(1, 0);
  r6(0, 0) = r(1, 1);
  const Operator rot = tensor(Operator(r6), Operator(r6));
  Matrix par = Matrix::Zero(36, 36);
  for (int a : {0, 1})
    for (int b : {0, 1}) {
      const int idx = (a == 0 ? 1 : 0) * 6 + (b == 0 ? 1 : 0);
      par(idx, idx) = (a == b) ? 1.0 : -1.0;
    }
  const Operator parity_obs(rot.dagger().matrix() * par * rot.matrix());
  CHECK(expectation_real(rho, parity_obs) ==
        doctest::Approx(parity_oracle).epsilon(1e-10));
}

TEST_CASE("density state invariants and validation") {
  auto gen = rt::rng(21);
  const DensityState st = rt::random_density(36, gen);
  CHECK(st.trace_error() < 1e-12);
  CHECK(st.hermiticity_error() < 1e-12);
  CHECK(st.min_eigenvalue() > -1e-12);
  CHECK_NOTHROW(st.validate());

  DensityState bad = st;
  bad.rho *= 1.5;
  CHECK_THROWS_AS(bad.validate(), NumericalError);

  CHECK_THROWS_AS(DensityState::pure(Vector::Zero(6)), ConfigError);
}

TEST_CASE("ion embedding order round-trips under double exchange") {
  auto gen = rt::rng(31);
  const Operator a(rt::random_matrix(6, gen));
  const Operator b(rt::random_matrix(6, gen));
  const Matrix ab = tensor(a, b).matrix();
  CHECK((swap_ions(ab) - tensor(b, a).matrix()).norm() < 1e-12 * ab.norm());
  CHECK((swap_ions(swap_ions(ab)) - ab).norm() == doctest::Approx(0.0));
}

TEST_CASE("hamiltonian hermiticity tolerance") {
  auto gen = rt::rng(41);
  Operator h(rt::random_hermitian(36, gen));
  CHECK(h.is_hermitian(1e-12));
  h.matrix()(0, 1) += Complex(0, 1e-6);
  CHECK_FALSE(h.is_hermitian(1e-12));
}
