#pragma once

#include <array>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/errors.hpp"
#include "qbath/core/qubit.hpp"
#include "qbath/core/tolerances.hpp"

namespace qbath {

using RealMat3 = std::array<std::array<double, 3>, 3>;

/// Thrown when a Kossakowski matrix that must generate a completely positive flow is not PSD.
class CpViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Real coefficients of H = sum h1_i (s_i x 1) + sum h2_i (1 x s_i) + sum h12_ij (s_i x s_j).
struct HamiltonianSpec {
  Vec3 h1{};
  Vec3 h2{};
  RealMat3 h12{};
};

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec);

ComplexMatrix to_matrix(const RealMat3& m);

/// The 6x6 coefficient matrix D = [[A, B], [B^dagger, C]] of the dissipator.
/// A and C are always checked for Hermiticity; positivity only by `checked`.
class KossakowskiMatrix {
 public:
  /// Throws CpViolation unless the assembled matrix is PSD within `psd_tol`.
  static KossakowskiMatrix checked(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                   double psd_tol = tol::psd);
  /// For deliberately non-CP experiments.
  static KossakowskiMatrix unchecked(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);
  static KossakowskiMatrix zero();

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }
  const ComplexMatrix& c() const { return c_; }
  const ComplexMatrix& matrix() const { return full_; }

  double min_eigenvalue() const;
  bool is_cp(double psd_tol = tol::psd) const;

 private:
  KossakowskiMatrix(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c);

  ComplexMatrix a_;
  ComplexMatrix b_;
  ComplexMatrix c_;
  ComplexMatrix full_;
};

/// [[A, B], [B^dagger, C]] without any checks.
ComplexMatrix assemble_blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

}  // namespace qbath
