#pragma once

// Markovian two-qubit generator  d/dt rho = -i[H, rho] + L[rho]  with
//   L[rho] = sum_{a,b} D_ab ( F_a rho F_b - 1/2 {F_b F_a, rho} ),
// F_a = s_a x 1 (a = 1..3) and 1 x s_{a-3} (a = 4..6).

#include <array>
#include <vector>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/density_matrix.hpp"
#include "qbath/dynamics/kossakowski.hpp"

namespace qbath {

/// The six fixed operators F_1..F_6 (stored 0-based).
const std::array<ComplexMatrix, 6>& lindblad_operators();

/// Dissipator for an arbitrary (possibly non-PSD) 6x6 coefficient matrix.
ComplexMatrix dissipator(const ComplexMatrix& coefficients, const ComplexMatrix& rho);
ComplexMatrix dissipator(const KossakowskiMatrix& d, const ComplexMatrix& rho);

/// Same map as `dissipator`, evaluated term by term from the A, B, C blocks
/// (single-qubit A and C pieces plus the B / B* cross terms). Kept independent
/// of the 6x6 sum for cross-validation.
ComplexMatrix dissipator_blockform(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                   const ComplexMatrix& rho);

class LindbladGenerator {
 public:
  LindbladGenerator(HamiltonianSpec hamiltonian, KossakowskiMatrix kossakowski);

  const HamiltonianSpec& hamiltonian_spec() const { return spec_; }
  const ComplexMatrix& hamiltonian() const { return h_; }
  const KossakowskiMatrix& kossakowski() const { return d_; }

  /// -i[H, rho] + L[rho]
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  HamiltonianSpec spec_;
  ComplexMatrix h_;
  KossakowskiMatrix d_;
};

/// Column-stacking vectorization: vec(rho)[col * n + row] = rho(row, col).
std::vector<cplx> vec(const ComplexMatrix& rho);
ComplexMatrix unvec(std::span<const cplx> v);

/// 16x16 matrix M with vec(-i[H, rho] + L_coeffs[rho]) = M vec(rho), built from
/// vec(X rho Y) = (Y^T x X) vec(rho).
ComplexMatrix superoperator(const ComplexMatrix& hamiltonian, const ComplexMatrix& coefficients);
ComplexMatrix superoperator(const LindbladGenerator& gen);

/// exp(t M) for a fixed time, reusable across initial states.
class Propagator {
 public:
  Propagator(const ComplexMatrix& superop, double t);

  double time() const { return t_; }
  const ComplexMatrix& matrix() const { return map_; }
  /// exp(tM) rho, re-Hermitized.
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  /// exp(tM) rho as computed.
  ComplexMatrix apply_raw(const ComplexMatrix& rho) const;

 private:
  double t_;
  ComplexMatrix map_;
};

/// rho(t) as a raw matrix (re-Hermitized, never projected onto PSD).
ComplexMatrix evolve_matrix(const LindbladGenerator& gen, const ComplexMatrix& rho0, double t);

/// rho(t) validated as a state within 10x the default tolerances. Throws
/// UsageError for t < 0 and ValidationError if the flow left the state space.
DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t);

/// Choi matrix sum_ij E_ij x Phi(E_ij) of a linear map on 4x4 matrices given as a 16x16 superoperator.
ComplexMatrix choi_matrix(const ComplexMatrix& map);

}  // namespace qbath
