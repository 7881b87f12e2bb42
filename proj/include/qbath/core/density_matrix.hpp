#pragma once

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/qubit.hpp"
#include "qbath/core/tolerances.hpp"

namespace qbath {

struct DensityTolerances {
  double herm = tol::herm;
  double trace = tol::trace;
  double psd = tol::psd;

  DensityTolerances scaled(double factor) const { return {herm * factor, trace * factor, psd * factor}; }
};

/// Two-qubit state: 4x4, Hermitian, unit trace, positive semidefinite.
/// Validated on construction; never silently corrected.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, DensityTolerances tolerances = {});

  static DensityMatrix maximally_mixed();
  static DensityMatrix product(const Vec3& bloch1, const Vec3& bloch2);
  /// |psi><psi| for a normalized 4-vector.
  static DensityMatrix pure(std::span<const cplx> psi);

  const ComplexMatrix& matrix() const { return m_; }
  double purity() const;

 private:
  ComplexMatrix m_;
};

}  // namespace qbath
