#include <doctest.h>

#include "qbath/core/eigen.hpp"
#include "qbath/core/expm.hpp"
#include "qbath/core/qubit.hpp"
#include "qbath/dynamics/generator.hpp"
#include "qbath/analysis/ppt.hpp"
#include "qbath/scenario/example_bath.hpp"
#include "support/random.hpp"

using namespace qbath;

namespace {

const ComplexMatrix kZero3(3);

ComplexMatrix single_qubit_dissipator(const ComplexMatrix& coeffs, const ComplexMatrix& rho) {
  ComplexMatrix out(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto si = pauli(i + 1);
      const auto sj = pauli(j + 1);
      out += coeffs(i, j) * (si * rho * sj - cplx(0.5) * anticommutator(sj * si, rho));
    }
  return out;
}

ComplexMatrix rotate_unitarily(const ComplexMatrix& h, const ComplexMatrix& rho, double t) {
  const auto u = expm(cplx(0, -t) * h);
  return u * rho * u.adjoint();
}

}  // namespace

TEST_CASE("Hamiltonian assembly") {
  CHECK(max_abs(build_hamiltonian({})) == 0.0);

  HamiltonianSpec z;
  z.h1 = {0, 0, 1};
  CHECK(max_abs_diff(build_hamiltonian(z), ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0})) == 0.0);

  HamiltonianSpec ex;
  ex.h12 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto ev = hermitian_eigenvalues(build_hamiltonian(ex));
  CHECK(ev[0] == doctest::Approx(-3.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(ev[3] == doctest::Approx(1.0));

  testing::Rng rng(11);
  CHECK(is_hermitian(build_hamiltonian(testing::random_hamiltonian(rng)), 1e-15));
}

TEST_CASE("Kossakowski matrix checks") {
  const auto id = ComplexMatrix::identity(3);
  CHECK_NOTHROW(KossakowskiMatrix::checked(id, kZero3, id));
  CHECK_THROWS_AS(KossakowskiMatrix::checked(id, id * cplx(2.0), id), CpViolation);
  CHECK_NOTHROW(KossakowskiMatrix::unchecked(id, id * cplx(2.0), id));
  ComplexMatrix skew = id;
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(KossakowskiMatrix::unchecked(skew, kZero3, id), ValidationError);
  const auto d = KossakowskiMatrix::checked(id, kZero3, id);
  CHECK(max_abs_diff(d.matrix(), ComplexMatrix::identity(6)) == 0.0);
  CHECK(d.is_cp());
  CHECK_FALSE(KossakowskiMatrix::unchecked(id, id * cplx(2.0), id).is_cp());
}

TEST_CASE("Lindblad operators are the six fixed local Paulis") {
  const auto& f = lindblad_operators();
  for (int a = 0; a < 3; ++a) {
    CHECK(max_abs_diff(f[a], sigma_first(a + 1)) == 0.0);
    CHECK(max_abs_diff(f[a + 3], sigma_second(a + 1)) == 0.0);
  }
  for (const auto& op : f) {
    CHECK(is_hermitian(op, 0.0));
    CHECK(std::abs(op.trace()) == 0.0);
  }
}

TEST_CASE("dissipator examples") {
  testing::Rng rng(12);
  const auto rho = testing::random_state(rng);
  CHECK(max_abs(dissipator(KossakowskiMatrix::zero(), rho)) == 0.0);

  const auto rho2 = bloch_state({0.3, -0.2, 0.5});
  const auto d = KossakowskiMatrix::checked(ComplexMatrix::identity(3), kZero3, kZero3);
  const auto out = dissipator(d, kron(bloch_state({0, 0, 1}), rho2));
  CHECK(max_abs_diff(out, kron(pauli(3), rho2) * cplx(-2.0)) < 1e-15);

  for (int k = 0; k < 10; ++k) {
    const auto dk = testing::random_kossakowski(rng);
    CHECK(std::abs(dissipator(dk, ComplexMatrix::identity(4) * cplx(0.25)).trace()) < 1e-15);
    const auto l = dissipator(dk, testing::random_hermitian(rng, 4));
    CHECK(std::abs(l.trace()) < 1e-13);
    CHECK(hermiticity_defect(l) < 1e-13);
  }
}

TEST_CASE("6x6 and block-form dissipators agree") {
  testing::Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const auto d = testing::random_kossakowski(rng);
    const auto rho = testing::random_hermitian(rng, 4);
    CHECK(max_abs_diff(dissipator(d, rho), dissipator_blockform(d.a(), d.b(), d.c(), rho)) < 1e-12);
  }
  const auto rho = testing::random_hermitian(rng, 4);
  CHECK(max_abs(dissipator_blockform(kZero3, kZero3, kZero3, rho)) == 0.0);
}

TEST_CASE("without correlations the dissipator splits into local parts") {
  testing::Rng rng(14);
  const auto d = testing::random_kossakowski(rng);
  const auto local = KossakowskiMatrix::unchecked(d.a(), kZero3, d.c());
  const auto r1 = testing::random_hermitian(rng, 2);
  const auto r2 = testing::random_hermitian(rng, 2);
  const auto expected = kron(single_qubit_dissipator(d.a(), r1), r2) + kron(r1, single_qubit_dissipator(d.c(), r2));
  CHECK(max_abs_diff(dissipator(local, kron(r1, r2)), expected) < 1e-13);
}

TEST_CASE("superoperator reproduces the generator") {
  CHECK(max_abs(superoperator(ComplexMatrix(4), ComplexMatrix(6))) == 0.0);
  testing::Rng rng(15);
  for (int k = 0; k < 10; ++k) {
    const auto gen = testing::random_generator(rng);
    const auto m = superoperator(gen);
    const auto rho = testing::random_hermitian(rng, 4);
    CHECK(max_abs_diff(unvec(m.apply(vec(rho))), gen.apply(rho)) < 1e-12);
    const auto left = m.adjoint().apply(vec(ComplexMatrix::identity(4)));
    double worst = 0.0;
    for (const auto& z : left) worst = std::max(worst, std::abs(z));
    CHECK(worst < 1e-12);
  }
  const auto rho = testing::random_matrix(rng, 4);
  CHECK(max_abs_diff(unvec(vec(rho)), rho) == 0.0);
  CHECK(vec(rho)[1] == rho(1, 0));
}

TEST_CASE("evolve examples") {
  testing::Rng rng(16);
  const auto rho0 = DensityMatrix(testing::random_state(rng));
  const auto gen = testing::random_generator(rng);
  CHECK(max_abs_diff(evolve(gen, rho0, 0.0).matrix(), rho0.matrix()) == 0.0);
  CHECK_THROWS_AS(evolve(gen, rho0, -1.0), UsageError);

  HamiltonianSpec z;
  z.h1 = {0, 0, 1};
  const LindbladGenerator unitary(z, KossakowskiMatrix::zero());
  for (double t : {0.3, 1.0, 5.0}) {
    const auto rho = evolve(unitary, rho0, t);
    CHECK(rho.purity() == doctest::Approx(rho0.purity()).epsilon(1e-12));
    CHECK(max_abs_diff(rho.matrix(), rotate_unitarily(unitary.hamiltonian(), rho0.matrix(), t)) < 1e-12);
  }

  const LindbladGenerator bath({}, example_bath({0.8, 0.6}));
  const auto up_up = DensityMatrix::product({0, 0, 1}, {0, 0, 1});
  CHECK(ppt_min_eigenvalue(up_up) >= -1e-15);
  for (double t : {1e-3, 1e-2, 0.05}) CHECK(ppt_min_eigenvalue(evolve(bath, up_up, t)) < -1e-6);
}
