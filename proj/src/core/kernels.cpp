#include "qbath/core/kernels.hpp"

namespace qbath::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(QBATH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa best() {
  static const Isa chosen = supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return chosen;
}

namespace scalar {

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void gemv(const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += m[i * cols + j] * x[j];
    y[i] = acc;
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace scalar

void gemm(Isa isa, const cplx* a, const cplx* b, cplx* c, std::size_t n) {
#if defined(QBATH_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::gemm(a, b, c, n);
#endif
  (void)isa;
  scalar::gemm(a, b, c, n);
}

void gemv(Isa isa, const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
#if defined(QBATH_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::gemv(m, x, y, rows, cols);
#endif
  (void)isa;
  scalar::gemv(m, x, y, rows, cols);
}

void axpy(Isa isa, cplx alpha, const cplx* x, cplx* y, std::size_t n) {
#if defined(QBATH_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::axpy(alpha, x, y, n);
#endif
  (void)isa;
  scalar::axpy(alpha, x, y, n);
}

}  // namespace qbath::kernels
