#include "qbath/core/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbath/core/errors.hpp"

namespace qbath {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p, q) by A <- J^dagger A J, where J is a phase on column q followed by a
// real Givens rotation in the (p, q) plane.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx phase = std::conj(apq) / g;  // makes (J^dagger A J)(p, q) real before rotating
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns: new_p = c*col_p - s*phase*col_q, new_q = s*col_p + c*phase*col_q.
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q) * phase;
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  // Rows with the conjugate transform.
  const cplx phase_c = std::conj(phase);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k) * phase_c;
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, bool assume_hermitian) {
  if (!assume_hermitian) {
    const double defect = hermiticity_defect(m);
    if (defect > tol::herm) {
      std::ostringstream msg;
      msg << "hermitian_eigenvalues: input is not Hermitian (defect " << defect << ")";
      throw ValidationError(msg.str());
    }
  }
  ComplexMatrix a = hermitian_part(m);
  const std::size_t n = a.dim();
  const double scale = frobenius_norm(a);
  const double target = 1e-14 * scale;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue(const ComplexMatrix& m, bool assume_hermitian) {
  return hermitian_eigenvalues(m, assume_hermitian).front();
}

bool is_psd(const ComplexMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

}  // namespace qbath
