#include <doctest.h>

#include "qbath/core/qubit.hpp"
#include "support/random.hpp"

using namespace qbath;

TEST_CASE("Pauli algebra") {
  const cplx i(0, 1);
  for (int a = 1; a <= 3; ++a) {
    CHECK(max_abs_diff(pauli(a) * pauli(a), ComplexMatrix::identity(2)) < 1e-15);
    CHECK(is_hermitian(pauli(a), 0.0));
    CHECK(std::abs(pauli(a).trace()) < 1e-15);
  }
  CHECK(max_abs_diff(pauli(1) * pauli(2), i * pauli(3)) < 1e-15);
  CHECK(max_abs_diff(pauli(2) * pauli(3), i * pauli(1)) < 1e-15);
  CHECK(max_abs_diff(pauli(3) * pauli(1), i * pauli(2)) < 1e-15);
  CHECK_THROWS_AS(pauli(0), UsageError);
  CHECK_THROWS_AS(pauli(4), UsageError);
}

TEST_CASE("tensor order puts the first factor slow") {
  const auto z1 = sigma_first(3);
  CHECK(max_abs_diff(z1, ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0})) == 0.0);
  CHECK(max_abs_diff(sigma_second(3), ComplexMatrix::diagonal({1.0, -1.0, 1.0, -1.0})) == 0.0);
  const auto v = kron(std::vector<cplx>{1.0, 0.0}, std::vector<cplx>{0.0, 1.0});
  CHECK(v == basis_vector(4, 1));
}

TEST_CASE("partial transpose on the second factor") {
  testing::Rng rng(5);
  const auto a = testing::random_matrix(rng, 2);
  const auto b = testing::random_matrix(rng, 2);
  CHECK(max_abs_diff(partial_transpose_second(kron(a, b)), kron(a, b.transpose())) < 1e-14);

  const auto rho = testing::random_state(rng);
  const auto pt = partial_transpose_second(rho);
  CHECK(max_abs_diff(partial_transpose_second(pt), rho) == 0.0);
  CHECK(std::abs(pt.trace() - rho.trace()) < 1e-15);
  CHECK(hermiticity_defect(pt) < 1e-15);

  const auto h = testing::random_hermitian(rng, 4);
  const auto k = testing::random_hermitian(rng, 4);
  CHECK(max_abs_diff(partial_transpose_second(h + cplx(2.0) * k),
                     partial_transpose_second(h) + cplx(2.0) * partial_transpose_second(k)) < 1e-14);
}

TEST_CASE("Bloch states") {
  const auto up = bloch_state({0, 0, 1});
  CHECK(max_abs_diff(up, ComplexMatrix::diagonal({1.0, 0.0})) < 1e-15);
  const auto plus_x = bloch_state({1, 0, 0});
  CHECK(plus_x(0, 1) == cplx(0.5));
  CHECK(max_abs_diff(product_state({0, 0, 1}, {0, 0, -1}), ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0})) < 1e-15);
  CHECK_THROWS_AS(basis_vector(4, 4), UsageError);
}
