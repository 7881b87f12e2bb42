#pragma once

// Qubit primitives. Two-qubit basis order is |a1 b1>, |a1 b2>, |a2 b1>, |a2 b2>,
// i.e. index = 2*i + j with the first subsystem slow, matching kron(first, second).

#include <array>
#include <span>

#include "qbath/core/complex_matrix.hpp"

namespace qbath {

using Vec3 = std::array<double, 3>;

/// Pauli matrix sigma_i, i in {1, 2, 3}. Throws UsageError otherwise.
ComplexMatrix pauli(int i);

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
std::vector<cplx> kron(std::span<const cplx> lhs, std::span<const cplx> rhs);

/// sigma_i (x) 1
ComplexMatrix sigma_first(int i);
/// 1 (x) sigma_i
ComplexMatrix sigma_second(int i);

/// Transposes the second tensor factor of a 4x4 operator (in the computational basis).
/// Linear, trace- and Hermiticity-preserving, and an involution.
ComplexMatrix partial_transpose_second(const ComplexMatrix& rho);

/// Single-qubit state (1 + r.sigma)/2. |r| <= 1 is not enforced here.
ComplexMatrix bloch_state(const Vec3& r);

/// (1 + r1.sigma)/2 (x) (1 + r2.sigma)/2
ComplexMatrix product_state(const Vec3& r1, const Vec3& r2);

/// Computational basis vector e_k of dimension n.
std::vector<cplx> basis_vector(std::size_t n, std::size_t k);

}  // namespace qbath
