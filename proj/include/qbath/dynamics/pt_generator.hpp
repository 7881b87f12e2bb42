#pragma once

// Generator of the partially transposed state rho~ = PT_2(rho):
//   d/dt rho~ = -i[H~, rho~] + L~[rho~],
// where L~ has the dissipator form with coefficient matrix S D~ S and
//   H~ = sum h1_i (s_i x 1) + sum h2_i S_ij (1 x s_j) + sum Im(B S)_ij (s_i x s_j),
//   D~ = [[A, Re(B) + i H12], [Re(B)^T - i H12^T, C^T]],   S = diag(1_3, diag(-1, 1, -1)).
// D~ is Hermitian but in general not PSD, so the flow of rho~ need not be positive.

#include "qbath/dynamics/generator.hpp"

namespace qbath {

struct PTGenerator {
  ComplexMatrix h_tilde;
  ComplexMatrix d_tilde;
  ComplexMatrix s_conjugated;
  /// The 3x3 sign matrix diag(-1, 1, -1).
  ComplexMatrix s;
};

/// diag(-1, 1, -1)
ComplexMatrix pt_sign_matrix();
/// diag(1, 1, 1, -1, 1, -1)
ComplexMatrix pt_sign_matrix_6();

/// D~ from the blocks and the two-body Hamiltonian coefficients (pass zero H12 to drop them).
ComplexMatrix build_d_tilde(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                            const RealMat3& h12 = {});

PTGenerator build_pt_generator(const LindbladGenerator& gen);

ComplexMatrix pt_superoperator(const PTGenerator& ptgen);

/// rho~(t); Hermitian and trace preserving, possibly non-positive.
ComplexMatrix evolve_pt(const PTGenerator& ptgen, const ComplexMatrix& rho_tilde0, double t);

}  // namespace qbath
