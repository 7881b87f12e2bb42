#include "qbath/analysis/ppt.hpp"

#include <cmath>

#include "qbath/core/eigen.hpp"
#include "qbath/core/errors.hpp"
#include "qbath/core/qubit.hpp"

namespace qbath {

double ppt_min_eigenvalue(const DensityMatrix& rho) { return ppt_min_eigenvalue(rho.matrix()); }

double ppt_min_eigenvalue(const ComplexMatrix& rho) { return min_eigenvalue(partial_transpose_second(rho)); }

double negativity(const DensityMatrix& rho) { return negativity(rho.matrix()); }

double negativity(const ComplexMatrix& rho) {
  double sum = 0.0;
  for (double l : hermitian_eigenvalues(partial_transpose_second(rho)))
    if (l < 0.0) sum -= l;
  return sum;
}

ProbeVector::ProbeVector(cplx psi11, cplx psi12, cplx psi21, cplx psi22) : amp_{psi11, psi12, psi21, psi22} {
  double norm2 = 0.0;
  for (const auto& z : amp_) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > 1e-12) throw ValidationError("probe vector is not normalized");
}

ProbeVector ProbeVector::normalized(cplx psi11, cplx psi12, cplx psi21, cplx psi22) {
  const double n = std::sqrt(std::norm(psi11) + std::norm(psi12) + std::norm(psi21) + std::norm(psi22));
  if (n == 0.0) throw UsageError("cannot normalize the zero probe");
  return ProbeVector(psi11 / n, psi12 / n, psi21 / n, psi22 / n);
}

ProbeVector ProbeVector::creation(cplx psi12, cplx psi21) { return normalized(0.0, psi12, psi21, 0.0); }

double probe_expectation(const ComplexMatrix& rho_tilde, const ProbeVector& psi) {
  if (rho_tilde.dim() != 4) throw UsageError("probe_expectation expects a 4x4 matrix");
  return expectation(rho_tilde, psi.amplitudes()).real();
}

}  // namespace qbath
