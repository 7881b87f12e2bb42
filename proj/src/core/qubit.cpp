#include "qbath/core/qubit.hpp"

#include "qbath/core/errors.hpp"

namespace qbath {

ComplexMatrix pauli(int i) {
  constexpr cplx I{0.0, 1.0};
  switch (i) {
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -I}, {I, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw UsageError("pauli index must be 1, 2 or 3");
  }
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t m = lhs.dim();
  const std::size_t n = rhs.dim();
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const cplx a = lhs(i, j);
      if (a == cplx{}) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = a * rhs(k, l);
    }
  return out;
}

std::vector<cplx> kron(std::span<const cplx> lhs, std::span<const cplx> rhs) {
  std::vector<cplx> out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs)
    for (const auto& b : rhs) out.push_back(a * b);
  return out;
}

ComplexMatrix sigma_first(int i) { return kron(pauli(i), ComplexMatrix::identity(2)); }

ComplexMatrix sigma_second(int i) { return kron(ComplexMatrix::identity(2), pauli(i)); }

ComplexMatrix partial_transpose_second(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw UsageError("partial_transpose_second expects a 4x4 matrix");
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
  return out;
}

ComplexMatrix bloch_state(const Vec3& r) {
  ComplexMatrix s = ComplexMatrix::identity(2);
  for (int i = 1; i <= 3; ++i) s += r[i - 1] * pauli(i);
  return 0.5 * s;
}

ComplexMatrix product_state(const Vec3& r1, const Vec3& r2) { return kron(bloch_state(r1), bloch_state(r2)); }

std::vector<cplx> basis_vector(std::size_t n, std::size_t k) {
  if (k >= n) throw UsageError("basis index out of range");
  std::vector<cplx> e(n);
  e[k] = 1.0;
  return e;
}

}  // namespace qbath
