#pragma once

#include <array>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/density_matrix.hpp"

namespace qbath {

/// Minimum eigenvalue of PT_2(rho). For two qubits, rho is entangled iff this is < -tol::psd.
double ppt_min_eigenvalue(const DensityMatrix& rho);
/// Same for any Hermitian 4x4 matrix (e.g. a raw evolution output).
double ppt_min_eigenvalue(const ComplexMatrix& rho);

/// Sum of |negative eigenvalues| of PT_2(rho).
double negativity(const DensityMatrix& rho);
double negativity(const ComplexMatrix& rho);

/// Probe |psi> = sum psi_ij |a_i> (x) |b_j>, amplitudes indexed as in the two-qubit basis.
class ProbeVector {
 public:
  /// Throws ValidationError unless sum |psi_ij|^2 = 1 within 1e-12.
  ProbeVector(cplx psi11, cplx psi12, cplx psi21, cplx psi22);
  /// Rescales to unit norm; throws UsageError for the zero vector.
  static ProbeVector normalized(cplx psi11, cplx psi12, cplx psi21, cplx psi22);
  /// psi11 = psi22 = 0, the shape used by creation tests.
  static ProbeVector creation(cplx psi12, cplx psi21);

  cplx psi11() const { return amp_[0]; }
  cplx psi12() const { return amp_[1]; }
  cplx psi21() const { return amp_[2]; }
  cplx psi22() const { return amp_[3]; }
  std::span<const cplx> amplitudes() const { return amp_; }

 private:
  std::array<cplx, 4> amp_;
};

/// <psi| rho~ |psi> (real part; rho~ is Hermitian).
double probe_expectation(const ComplexMatrix& rho_tilde, const ProbeVector& psi);

}  // namespace qbath
