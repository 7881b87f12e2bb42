#include "qbath/core/expm.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "qbath/core/errors.hpp"

namespace qbath {

namespace {

constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// Largest 1-norm for which the unscaled [13/13] approximant meets unit roundoff.
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw UsageError("solve: dimension mismatch");
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (std::abs(lu(pivot, col)) == 0.0) throw ValidationError("solve: singular matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(lu(pivot, k), lu(col, k));
        std::swap(x(pivot, k), x(col, k));
      }
    }
    const cplx inv = 1.0 / lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) * inv;
      if (f == cplx{}) continue;
      for (std::size_t k = col; k < n; ++k) lu(r, k) -= f * lu(col, k);
      for (std::size_t k = 0; k < n; ++k) x(r, k) -= f * x(col, k);
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc = x(r, k);
      for (std::size_t c = r + 1; c < n; ++c) acc -= lu(r, c) * x(c, k);
      x(r, k) = acc / lu(r, r);
    }
  }
  return x;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double norm = norm1(m);
  int squarings = 0;
  if (norm > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  const ComplexMatrix a = m * std::ldexp(1.0, -squarings);

  const auto& b = kPade13;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  ComplexMatrix r = solve(v - u, v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace qbath
