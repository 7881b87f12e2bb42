#include "qbath/dynamics/generator.hpp"

#include "qbath/core/errors.hpp"
#include "qbath/core/expm.hpp"
#include "qbath/core/qubit.hpp"

namespace qbath {

namespace {

constexpr cplx kI{0.0, 1.0};

std::array<ComplexMatrix, 6> make_operators() {
  return {sigma_first(1), sigma_first(2), sigma_first(3), sigma_second(1), sigma_second(2), sigma_second(3)};
}

void require_time(double t) {
  if (!(t >= 0.0)) throw UsageError("evolution time must be nonnegative");
}

}  // namespace

const std::array<ComplexMatrix, 6>& lindblad_operators() {
  static const std::array<ComplexMatrix, 6> ops = make_operators();
  return ops;
}

ComplexMatrix dissipator(const ComplexMatrix& coefficients, const ComplexMatrix& rho) {
  if (coefficients.dim() != 6) throw UsageError("dissipator coefficients must be 6x6");
  if (rho.dim() != 4) throw UsageError("dissipator acts on 4x4 matrices");
  const auto& f = lindblad_operators();
  ComplexMatrix out(4);
  for (std::size_t a = 0; a < 6; ++a) {
    const ComplexMatrix f_rho = f[a] * rho;
    for (std::size_t b = 0; b < 6; ++b) {
      const cplx d = coefficients(a, b);
      if (d == cplx{}) continue;
      const ComplexMatrix fbfa = f[b] * f[a];
      out += d * (f_rho * f[b] - 0.5 * anticommutator(fbfa, rho));
    }
  }
  return out;
}

ComplexMatrix dissipator(const KossakowskiMatrix& d, const ComplexMatrix& rho) { return dissipator(d.matrix(), rho); }

ComplexMatrix dissipator_blockform(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                   const ComplexMatrix& rho) {
  if (a.dim() != 3 || b.dim() != 3 || c.dim() != 3) throw UsageError("Kossakowski blocks must be 3x3");
  if (rho.dim() != 4) throw UsageError("dissipator acts on 4x4 matrices");
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  ComplexMatrix out(4);
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix si = pauli(i);
    const ComplexMatrix si_1 = kron(si, id2);
    const ComplexMatrix one_si = kron(id2, si);
    for (int j = 1; j <= 3; ++j) {
      const ComplexMatrix sj = pauli(j);
      const ComplexMatrix sj_1 = kron(sj, id2);
      const ComplexMatrix one_sj = kron(id2, sj);
      const ComplexMatrix si_sj = kron(si, sj);
      const cplx aij = a(i - 1, j - 1);
      const cplx bij = b(i - 1, j - 1);
      const cplx cij = c(i - 1, j - 1);
      if (aij != cplx{}) out += aij * (si_1 * rho * sj_1 - 0.5 * anticommutator(kron(sj * si, id2), rho));
      if (cij != cplx{}) out += cij * (one_si * rho * one_sj - 0.5 * anticommutator(kron(id2, sj * si), rho));
      if (bij != cplx{}) {
        const ComplexMatrix anti = 0.5 * anticommutator(si_sj, rho);
        out += bij * (si_1 * rho * one_sj - anti);
        out += std::conj(bij) * (one_sj * rho * si_1 - anti);
      }
    }
  }
  return out;
}

LindbladGenerator::LindbladGenerator(HamiltonianSpec hamiltonian, KossakowskiMatrix kossakowski)
    : spec_(hamiltonian), h_(build_hamiltonian(spec_)), d_(std::move(kossakowski)) {}

ComplexMatrix LindbladGenerator::apply(const ComplexMatrix& rho) const {
  return -kI * commutator(h_, rho) + dissipator(d_, rho);
}

std::vector<cplx> vec(const ComplexMatrix& rho) {
  const std::size_t n = rho.dim();
  std::vector<cplx> v(n * n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row) v[col * n + row] = rho(row, col);
  return v;
}

ComplexMatrix unvec(std::span<const cplx> v) {
  std::size_t n = 0;
  while (n * n < v.size()) ++n;
  if (n * n != v.size()) throw UsageError("unvec: length is not a perfect square");
  ComplexMatrix rho(n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row) rho(row, col) = v[col * n + row];
  return rho;
}

ComplexMatrix superoperator(const ComplexMatrix& hamiltonian, const ComplexMatrix& coefficients) {
  if (hamiltonian.dim() != 4 || coefficients.dim() != 6) throw UsageError("superoperator: expects 4x4 H and 6x6 D");
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const auto& f = lindblad_operators();
  ComplexMatrix m = -kI * kron(id, hamiltonian) + kI * kron(hamiltonian.transpose(), id);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      const cplx d = coefficients(a, b);
      if (d == cplx{}) continue;
      const ComplexMatrix fbfa = f[b] * f[a];
      m += d * (kron(f[b].transpose(), f[a]) - 0.5 * kron(id, fbfa) - 0.5 * kron(fbfa.transpose(), id));
    }
  }
  return m;
}

ComplexMatrix superoperator(const LindbladGenerator& gen) {
  return superoperator(gen.hamiltonian(), gen.kossakowski().matrix());
}

Propagator::Propagator(const ComplexMatrix& superop, double t) : t_(t) {
  require_time(t);
  if (superop.dim() != 16) throw UsageError("Propagator expects a 16x16 superoperator");
  map_ = t == 0.0 ? ComplexMatrix::identity(16) : expm(t * superop);
}

ComplexMatrix Propagator::apply(const ComplexMatrix& rho) const {
  if (t_ == 0.0) return rho;
  return hermitian_part(unvec(map_.apply(vec(rho))));
}

ComplexMatrix Propagator::apply_raw(const ComplexMatrix& rho) const { return unvec(map_.apply(vec(rho))); }

ComplexMatrix evolve_matrix(const LindbladGenerator& gen, const ComplexMatrix& rho0, double t) {
  require_time(t);
  if (t == 0.0) return rho0;
  return Propagator(superoperator(gen), t).apply(rho0);
}

DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t) {
  return DensityMatrix(evolve_matrix(gen, rho0.matrix(), t), DensityTolerances{}.scaled(10.0));
}

ComplexMatrix choi_matrix(const ComplexMatrix& map) {
  if (map.dim() != 16) throw UsageError("choi_matrix expects a 16x16 superoperator");
  ComplexMatrix choi(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      ComplexMatrix unit(4);
      unit(i, j) = 1.0;
      const ComplexMatrix image = unvec(map.apply(vec(unit)));
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) choi(4 * i + k, 4 * j + l) = image(k, l);
    }
  return choi;
}

}  // namespace qbath
