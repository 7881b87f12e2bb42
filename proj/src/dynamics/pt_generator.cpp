#include "qbath/dynamics/pt_generator.hpp"

#include "qbath/core/errors.hpp"
#include "qbath/core/qubit.hpp"

namespace qbath {

ComplexMatrix pt_sign_matrix() { return ComplexMatrix::diagonal({-1.0, 1.0, -1.0}); }

ComplexMatrix pt_sign_matrix_6() { return ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0, 1.0, -1.0}); }

ComplexMatrix build_d_tilde(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                            const RealMat3& h12) {
  constexpr cplx kI{0.0, 1.0};
  const ComplexMatrix h = to_matrix(h12);
  const ComplexMatrix upper = b.real_part() + kI * h;
  ComplexMatrix d(6);
  d.set_block(0, 0, a);
  d.set_block(0, 3, upper);
  d.set_block(3, 0, b.real_part().transpose() - kI * h.transpose());
  d.set_block(3, 3, c.transpose());
  return d;
}

PTGenerator build_pt_generator(const LindbladGenerator& gen) {
  const HamiltonianSpec& spec = gen.hamiltonian_spec();
  const KossakowskiMatrix& d = gen.kossakowski();
  const ComplexMatrix s = pt_sign_matrix();
  const ComplexMatrix im_bs = (d.b() * s).imag_part();

  ComplexMatrix h_tilde(4);
  for (int i = 1; i <= 3; ++i) {
    h_tilde += spec.h1[i - 1] * sigma_first(i);
    h_tilde += spec.h2[i - 1] * s(i - 1, i - 1) * sigma_second(i);
    for (int j = 1; j <= 3; ++j) {
      const double c = im_bs(i - 1, j - 1).real();
      if (c != 0.0) h_tilde += c * kron(pauli(i), pauli(j));
    }
  }

  ComplexMatrix d_tilde = build_d_tilde(d.a(), d.b(), d.c(), spec.h12);
  const ComplexMatrix s6 = pt_sign_matrix_6();
  ComplexMatrix conjugated = s6 * d_tilde * s6;
  return PTGenerator{std::move(h_tilde), std::move(d_tilde), std::move(conjugated), s};
}

ComplexMatrix pt_superoperator(const PTGenerator& ptgen) { return superoperator(ptgen.h_tilde, ptgen.s_conjugated); }

ComplexMatrix evolve_pt(const PTGenerator& ptgen, const ComplexMatrix& rho_tilde0, double t) {
  if (!(t >= 0.0)) throw UsageError("evolution time must be nonnegative");
  if (t == 0.0) return rho_tilde0;
  return Propagator(pt_superoperator(ptgen), t).apply(rho_tilde0);
}

}  // namespace qbath
