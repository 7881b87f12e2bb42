#include <doctest.h>

#include "qbath/core/expm.hpp"
#include "qbath/core/qubit.hpp"
#include "qbath/dynamics/generator.hpp"
#include "support/random.hpp"

using namespace qbath;

namespace {

/// Classical RK4 for dX/dt = M X with fixed step.
ComplexMatrix rk4_exp(const ComplexMatrix& m, double t, double step) {
  const auto n = m.dim();
  ComplexMatrix x = ComplexMatrix::identity(n);
  const int steps = static_cast<int>(std::lround(t / step));
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = m * x;
    const auto k2 = m * (x + cplx(h / 2) * k1);
    const auto k3 = m * (x + cplx(h / 2) * k2);
    const auto k4 = m * (x + cplx(h) * k3);
    x += cplx(h / 6) * (k1 + cplx(2.0) * k2 + cplx(2.0) * k3 + k4);
  }
  return x;
}

}  // namespace

TEST_CASE("exponential of zero and of diagonals") {
  CHECK(max_abs_diff(expm(ComplexMatrix(5)), ComplexMatrix::identity(5)) == 0.0);
  const auto e = expm(ComplexMatrix::diagonal({1.0, -2.0, cplx(0, 3)}));
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-2.0)) < 1e-15);
  CHECK(std::abs(e(2, 2) - std::exp(cplx(0, 3))) < 1e-14);
}

TEST_CASE("Pauli rotation closed form") {
  const double theta = 0.7;
  const auto u = expm(cplx(0, -theta) * pauli(2));
  const auto expected = ComplexMatrix::identity(2) * cplx(std::cos(theta)) - cplx(0, std::sin(theta)) * pauli(2);
  CHECK(max_abs_diff(u, expected) < 1e-15);
  const auto big = expm(cplx(0, -40.0) * pauli(1));
  CHECK(max_abs_diff(big.adjoint() * big, ComplexMatrix::identity(2)) < 1e-12);
}

TEST_CASE("nilpotent input is exact") {
  const ComplexMatrix n{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
  const auto e = expm(n * cplx(3.0));
  CHECK(std::abs(e(0, 1) - 3.0) < 1e-14);
  CHECK(std::abs(e(0, 2) - 4.5) < 1e-14);
}

TEST_CASE("exp(A) exp(-A) = 1 and large norms are scaled") {
  testing::Rng rng(7);
  for (double scale : {0.01, 1.0, 20.0}) {
    const auto a = testing::random_matrix(rng, 6) * cplx(scale / 6);
    CHECK(max_abs_diff(expm(a) * expm(-a), ComplexMatrix::identity(6)) < 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("Pade agrees with RK4 on Lindblad superoperators") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 4; ++trial) {
    const auto gen = testing::random_generator(rng);
    const auto m = superoperator(gen);
    for (double t : {0.1, 1.0}) {
      CHECK(max_abs_diff(expm(m * cplx(t)), rk4_exp(m, t, 1e-3)) < 1e-10);
    }
  }
}

TEST_CASE("LU solve") {
  testing::Rng rng(9);
  const auto a = testing::random_matrix(rng, 5);
  const auto x = testing::random_matrix(rng, 5);
  CHECK(max_abs_diff(solve(a, a * x), x) < 1e-11);
  CHECK_THROWS_AS(solve(ComplexMatrix(3), ComplexMatrix::identity(3)), ValidationError);
}
