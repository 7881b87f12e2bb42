#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qbath/analysis/frame.hpp"
#include "qbath/analysis/ppt.hpp"
#include "qbath/dynamics/generator.hpp"

namespace qbath::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline cplx gaussian_c(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t dim) {
  ComplexMatrix m(dim);
  for (auto& z : m.entries()) z = gaussian_c(rng);
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) { return hermitian_part(random_matrix(rng, dim)); }

/// G G^dagger with G of random rank, scaled to unit trace.
inline ComplexMatrix random_psd(Rng& rng, std::size_t dim, std::size_t rank) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) g(i, k) = gaussian_c(rng);
  ComplexMatrix p = g * g.adjoint();
  p *= 1.0 / p.trace().real();
  return hermitian_part(p);
}

inline KossakowskiMatrix random_kossakowski(Rng& rng) {
  const auto rank = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  const ComplexMatrix d = random_psd(rng, 6, rank);
  return KossakowskiMatrix::checked(d.block(0, 0, 3), d.block(0, 3, 3), d.block(3, 3, 3), 1e-9);
}

inline HamiltonianSpec random_hamiltonian(Rng& rng, bool with_coupling = true) {
  HamiltonianSpec h;
  for (auto& x : h.h1) x = uniform(rng, -0.5, 0.5);
  for (auto& x : h.h2) x = uniform(rng, -0.5, 0.5);
  if (with_coupling)
    for (auto& row : h.h12)
      for (auto& x : row) x = uniform(rng, -0.5, 0.5);
  return h;
}

inline LindbladGenerator random_generator(Rng& rng, bool with_coupling = true) {
  return {random_hamiltonian(rng, with_coupling), random_kossakowski(rng)};
}

inline Vec3 random_angles(Rng& rng) {
  return {uniform(rng, 0.0, 2 * std::numbers::pi), uniform(rng, 0.0, std::numbers::pi),
          uniform(rng, 0.0, 2 * std::numbers::pi)};
}

inline InitialStateFrame random_frame(Rng& rng) {
  return InitialStateFrame::from_angles({random_angles(rng), random_angles(rng)});
}

inline Vec3 random_bloch(Rng& rng, bool pure = false) {
  Vec3 r{};
  double n = 0.0;
  std::normal_distribution<double> g;
  for (auto& x : r) {
    x = g(rng);
    n += x * x;
  }
  const double len = pure ? 1.0 : std::cbrt(uniform(rng, 0.0, 1.0));
  for (auto& x : r) x *= len / std::sqrt(n);
  return r;
}

/// psi11 = psi22 = 0 with both active components bounded away from zero.
inline ProbeVector random_creation_probe(Rng& rng) {
  const double theta = uniform(rng, 0.1, std::numbers::pi / 2 - 0.1);
  const double p1 = uniform(rng, 0.0, 2 * std::numbers::pi);
  const double p2 = uniform(rng, 0.0, 2 * std::numbers::pi);
  return ProbeVector::creation(std::polar(std::cos(theta), p1), std::polar(std::sin(theta), p2));
}

/// Random mixed two-qubit state from a Ginibre matrix of random rank.
inline ComplexMatrix random_state(Rng& rng) {
  const auto rank = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  return random_psd(rng, 4, rank);
}

}  // namespace qbath::testing
