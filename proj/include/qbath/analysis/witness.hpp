#pragma once

// The probe functional E(t) = <psi| PT_2(rho(t)) |psi> and its initial slope.
// With rho(0) = |a1 b1><a1 b1| and psi_11 = 0, E(0) = 0 and a negative slope
// means rho(t) acquires a negative partial-transpose eigenvalue right away.

#include <optional>

#include "qbath/analysis/frame.hpp"
#include "qbath/analysis/ppt.hpp"
#include "qbath/dynamics/generator.hpp"

namespace qbath {

/// Initial product state and the vectors entering the creation criterion.
struct CreationTest {
  InitialStateFrame frame;
  std::array<cplx, 6> w;
  std::array<cplx, 3> u;
  std::array<cplx, 3> v;
  std::optional<ProbeVector> probe;
};

CreationTest make_creation_test(const InitialStateFrame& frame, std::optional<ProbeVector> probe = std::nullopt);

/// d/dt E(0) for rho0 and psi given in the computational basis, from the generator itself.
/// Throws PreconditionError unless E(0) = 0 within 1e-12.
double witness_derivative_numeric(const LindbladGenerator& gen, const DensityMatrix& rho0, const ProbeVector& psi);

/// Same, with rho0 = |a1 b1><a1 b1| from the frame and psi in the |a_i b_j> basis
/// (partial transposition taken in the b basis).
double witness_derivative_numeric(const LindbladGenerator& gen, const InitialStateFrame& frame,
                                  const ProbeVector& psi);

/// E(t) for the frame's initial state; used by finite-difference checks and plots.
double witness_functional(const LindbladGenerator& gen, const InitialStateFrame& frame, const ProbeVector& psi,
                          double t);

/// R = [[P, Q], [Q, P]], P = 1/2 [[1, i, 0], [-i, 1, 0], [0, 0, 0]], Q = diag(-1/2, 1/2, 0).
ComplexMatrix build_R();

/// Tr[D R]: the initial slope for rho0 = |++><++| and probe (|+-> + |-+>)/sqrt(2).
double witness_derivative_trace(const KossakowskiMatrix& d);

/// w^dagger Psi^dagger W^T D~ W Psi w with W = diag(calU, calV) and
/// Psi = diag(psi21 1_3, -psi12 1_3). psi22 does not enter.
double witness_derivative_general(const ComplexMatrix& d_tilde, const InitialStateFrame& frame,
                                  const ProbeVector& psi);

}  // namespace qbath
