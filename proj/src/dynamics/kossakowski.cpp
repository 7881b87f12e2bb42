#include "qbath/dynamics/kossakowski.hpp"

#include <sstream>

#include "qbath/core/eigen.hpp"

namespace qbath {

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  ComplexMatrix h(4);
  for (int i = 1; i <= 3; ++i) {
    if (spec.h1[i - 1] != 0.0) h += spec.h1[i - 1] * sigma_first(i);
    if (spec.h2[i - 1] != 0.0) h += spec.h2[i - 1] * sigma_second(i);
    for (int j = 1; j <= 3; ++j) {
      const double c = spec.h12[i - 1][j - 1];
      if (c != 0.0) h += c * kron(pauli(i), pauli(j));
    }
  }
  return h;
}

ComplexMatrix to_matrix(const RealMat3& m) {
  ComplexMatrix out(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = m[i][j];
  return out;
}

ComplexMatrix assemble_blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  if (a.dim() != 3 || b.dim() != 3 || c.dim() != 3) throw UsageError("Kossakowski blocks must be 3x3");
  ComplexMatrix d(6);
  d.set_block(0, 0, a);
  d.set_block(0, 3, b);
  d.set_block(3, 0, b.adjoint());
  d.set_block(3, 3, c);
  return d;
}

KossakowskiMatrix::KossakowskiMatrix(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), full_(assemble_blocks(a_, b_, c_)) {
  if (!is_hermitian(a_, tol::herm)) throw ValidationError("Kossakowski block A is not Hermitian");
  if (!is_hermitian(c_, tol::herm)) throw ValidationError("Kossakowski block C is not Hermitian");
}

KossakowskiMatrix KossakowskiMatrix::checked(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                             double psd_tol) {
  KossakowskiMatrix d(a, b, c);
  if (const double lo = d.min_eigenvalue(); lo < -psd_tol) {
    std::ostringstream msg;
    msg << "Kossakowski matrix is not positive semidefinite (min eigenvalue " << lo
        << "); the flow would not be completely positive";
    throw CpViolation(msg.str());
  }
  return d;
}

KossakowskiMatrix KossakowskiMatrix::unchecked(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return KossakowskiMatrix(a, b, c);
}

KossakowskiMatrix KossakowskiMatrix::zero() {
  return KossakowskiMatrix(ComplexMatrix(3), ComplexMatrix(3), ComplexMatrix(3));
}

double KossakowskiMatrix::min_eigenvalue() const { return qbath::min_eigenvalue(full_, true); }

bool KossakowskiMatrix::is_cp(double psd_tol) const { return min_eigenvalue() >= -psd_tol; }

}  // namespace qbath
