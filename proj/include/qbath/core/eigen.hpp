#pragma once

#include <vector>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/tolerances.hpp"

namespace qbath {

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic complex Jacobi rotations.
///
/// Unless `assume_hermitian` is set, the input is checked against tol::herm and a
/// ValidationError is thrown on failure. The Hermitian part (M + M^dagger)/2 is what
/// gets diagonalized either way. Degenerate eigenvalues appear repeated.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, bool assume_hermitian = false);

double min_eigenvalue(const ComplexMatrix& m, bool assume_hermitian = false);

/// min eigenvalue >= -tol
bool is_psd(const ComplexMatrix& m, double tol = tol::psd);

}  // namespace qbath
