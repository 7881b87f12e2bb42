#include <doctest.h>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/kernels.hpp"
#include "support/random.hpp"

using namespace qbath;
namespace k = qbath::kernels;

namespace {

std::vector<k::Isa> available() {
  std::vector<k::Isa> out{k::Isa::scalar};
  if (k::supported(k::Isa::avx2)) out.push_back(k::Isa::avx2);
  return out;
}

double max_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  testing::Rng rng(1);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u, 16u}) {
    const auto a = testing::random_matrix(rng, n);
    const auto b = testing::random_matrix(rng, n);
    std::vector<cplx> c(n * n);
    k::scalar::gemm(a.data(), b.data(), c.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += a(i, l) * b(l, j);
        CHECK(std::abs(c[i * n + j] - s) < 1e-13);
      }
  }
}

TEST_CASE("every supported ISA agrees with the scalar reference") {
  testing::Rng rng(2);
  for (auto isa : available()) {
    CAPTURE(k::name(isa));
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 16u, 17u}) {
      const auto a = testing::random_matrix(rng, n);
      const auto b = testing::random_matrix(rng, n);
      std::vector<cplx> ref(n * n), got(n * n);
      k::scalar::gemm(a.data(), b.data(), ref.data(), n);
      k::gemm(isa, a.data(), b.data(), got.data(), n);
      CHECK(max_diff(ref, got) < 1e-12);

      for (std::size_t cols : {std::size_t{1}, n, n + 3}) {
        std::vector<cplx> m(n * cols), x(cols), y_ref(n), y_got(n);
        for (auto& z : m) z = testing::gaussian_c(rng);
        for (auto& z : x) z = testing::gaussian_c(rng);
        k::scalar::gemv(m.data(), x.data(), y_ref.data(), n, cols);
        k::gemv(isa, m.data(), x.data(), y_got.data(), n, cols);
        CHECK(max_diff(y_ref, y_got) < 1e-12);
      }

      std::vector<cplx> x(n * n + 1), y0(n * n + 1);
      for (auto& z : x) z = testing::gaussian_c(rng);
      for (auto& z : y0) z = testing::gaussian_c(rng);
      auto y_ref = y0, y_got = y0;
      const cplx alpha = testing::gaussian_c(rng);
      k::scalar::axpy(alpha, x.data(), y_ref.data(), x.size());
      k::axpy(isa, alpha, x.data(), y_got.data(), x.size());
      CHECK(max_diff(y_ref, y_got) < 1e-13);
    }
  }
}

TEST_CASE("ISA selection is stable and supported") {
  CHECK(k::supported(k::Isa::scalar));
  CHECK(k::supported(k::best()));
  CHECK(k::best() == k::best());
  CHECK(k::name(k::Isa::scalar) == "scalar");
}
