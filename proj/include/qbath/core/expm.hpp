#pragma once

#include "qbath/core/complex_matrix.hpp"

namespace qbath {

/// exp(M) by scaling and squaring with a degree-13 Pade approximant
/// (Higham's variant, backward error below double-precision unit roundoff).
ComplexMatrix expm(const ComplexMatrix& m);

/// Solves A X = B by LU with partial pivoting. Throws ValidationError if A is singular.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qbath
