#pragma once

// Dense complex kernels behind ComplexMatrix.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant. The variant is picked once at startup from CPUID; callers that
// need a specific path (equivalence tests, benchmarks) pass the Isa directly.
// Storage is row-major std::complex<double>, i.e. interleaved (re, im).

#include <complex>
#include <cstddef>
#include <string_view>

namespace qbath::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa);

/// True when the running CPU and this build can execute `isa`.
bool supported(Isa isa);

/// Fastest supported Isa; computed once, immutable afterwards.
Isa best();

/// c = a * b for n x n row-major matrices. c must not alias a or b.
void gemm(Isa isa, const cplx* a, const cplx* b, cplx* c, std::size_t n);
/// y = m * x, m is rows x cols row-major. y must not alias x.
void gemv(Isa isa, const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols);
/// y += alpha * x over n entries.
void axpy(Isa isa, cplx alpha, const cplx* x, cplx* y, std::size_t n);

inline void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) { gemm(best(), a, b, c, n); }
inline void gemv(const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
  gemv(best(), m, x, y, rows, cols);
}
inline void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { axpy(best(), alpha, x, y, n); }

namespace scalar {
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemv(const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace scalar

#if defined(QBATH_HAVE_AVX2)
namespace avx2 {
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemv(const cplx* m, const cplx* x, cplx* y, std::size_t rows, std::size_t cols);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace qbath::kernels
