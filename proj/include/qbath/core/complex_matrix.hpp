#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbath {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. The common carrier for states (4x4),
/// Kossakowski matrices (6x6) and superoperators (16x16).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of dimension dim.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; rows.size() must equal dim*dim.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  /// Nested rows, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::initializer_list<cplx> diag);
  /// |x><y|
  static ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<cplx> entries() { return data_; }
  std::span<const cplx> entries() const { return data_; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  ComplexMatrix real_part() const;
  ComplexMatrix imag_part() const;
  cplx trace() const;

  /// Square sub-block of side `size` starting at (row, col).
  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t size) const;
  void set_block(std::size_t row, std::size_t col, const ComplexMatrix& sub);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  /// y = M x
  std::vector<cplx> apply(std::span<const cplx> x) const;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
/// Induced 1-norm (max column sum).
double norm1(const ComplexMatrix& m);

/// ||M - M^dagger||_max
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
/// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// [A, B]
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// {A, B}
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// <x|y> with the first argument conjugated.
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
/// <x|M|x>
cplx expectation(const ComplexMatrix& m, std::span<const cplx> x);

}  // namespace qbath
