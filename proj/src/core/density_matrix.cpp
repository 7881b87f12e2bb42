#include "qbath/core/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "qbath/core/eigen.hpp"
#include "qbath/core/errors.hpp"

namespace qbath {

DensityMatrix::DensityMatrix(ComplexMatrix m, DensityTolerances tolerances) : m_(std::move(m)) {
  if (m_.dim() != 4) throw ValidationError("density matrix must be 4x4");
  std::ostringstream msg;
  if (const double defect = hermiticity_defect(m_); defect > tolerances.herm) {
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw ValidationError(msg.str());
  }
  if (const double drift = std::abs(m_.trace() - 1.0); drift > tolerances.trace) {
    msg << "density matrix trace differs from 1 by " << drift;
    throw ValidationError(msg.str());
  }
  if (const double lo = min_eigenvalue(m_, true); lo < -tolerances.psd) {
    msg << "density matrix has negative eigenvalue " << lo;
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(0.25 * ComplexMatrix::identity(4)); }

DensityMatrix DensityMatrix::product(const Vec3& bloch1, const Vec3& bloch2) {
  return DensityMatrix(product_state(bloch1, bloch2));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
  if (psi.size() != 4) throw UsageError("pure state needs 4 amplitudes");
  return DensityMatrix(ComplexMatrix::outer(psi, psi));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

}  // namespace qbath
