#include <immintrin.h>

#include "qbath/core/kernels.hpp"

namespace qbath::kernels::avx2 {

namespace {

inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

// (a broadcast) * [b0, b1] for two packed complex values.
inline __m256d mul_broadcast(__m256d are, __m256d aim, __m256d b) {
  const __m256d bsw = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

// Lane-wise complex product of two packed pairs.
inline __m256d mul_pairs(__m256d m, __m256d x) {
  const __m256d mre = _mm256_movedup_pd(m);
  const __m256d mim = _mm256_permute_pd(m, 0b1111);
  const __m256d xsw = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(mre, x, _mm256_mul_pd(mim, xsw));
}

}  // namespace

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = raw(c + i * n);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const __m256d are = _mm256_set1_pd(aik.real());
      const __m256d aim = _mm256_set1_pd(aik.imag());
      const double* brow = raw(b + k * n);
      for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d bv = _mm256_loadu_pd(brow + 4 * p);
        const __m256d cv = _mm256_loadu_pd(crow + 4 * p);
        _mm256_storeu_pd(crow + 4 * p, _mm256_add_pd(cv, mul_broadcast(are, aim, bv)));
      }
      if (n % 2 != 0) c[i * n + n - 1] += aik * b[k * n + n - 1];
    }
  }
}

void gemv(const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
  const std::size_t pairs = cols / 2;
  for (std::size_t i = 0; i < rows; ++i) {
    const double* mrow = raw(m + i * cols);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t p = 0; p < pairs; ++p) {
      acc = _mm256_add_pd(acc, mul_pairs(_mm256_loadu_pd(mrow + 4 * p), _mm256_loadu_pd(raw(x) + 4 * p)));
    }
    const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double out[2];
    _mm_store_pd(out, folded);
    cplx sum(out[0], out[1]);
    if (cols % 2 != 0) sum += m[i * cols + cols - 1] * x[cols - 1];
    y[i] = sum;
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d xv = _mm256_loadu_pd(raw(x) + 4 * p);
    const __m256d yv = _mm256_loadu_pd(raw(y) + 4 * p);
    _mm256_storeu_pd(raw(y) + 4 * p, _mm256_add_pd(yv, mul_broadcast(are, aim, xv)));
  }
  if (n % 2 != 0) y[n - 1] += alpha * x[n - 1];
}

}  // namespace qbath::kernels::avx2
