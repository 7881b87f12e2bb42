#include "qbath/analysis/witness.hpp"

#include <cmath>
#include <sstream>

#include "qbath/core/errors.hpp"
#include "qbath/core/qubit.hpp"

namespace qbath {

namespace {

constexpr double kZeroStartTol = 1e-12;

double slope_at_start(const ComplexMatrix& rho0, const ComplexMatrix& derivative, const ProbeVector& psi) {
  const double e0 = probe_expectation(partial_transpose_second(rho0), psi);
  if (std::abs(e0) > kZeroStartTol) {
    std::ostringstream msg;
    msg << "probe functional does not vanish at t = 0 (E(0) = " << e0 << ")";
    throw PreconditionError(msg.str());
  }
  return probe_expectation(partial_transpose_second(derivative), psi);
}

}  // namespace

CreationTest make_creation_test(const InitialStateFrame& frame, std::optional<ProbeVector> probe) {
  const auto fv = frame_vectors(frame);
  return CreationTest{frame, pauli_w(), fv.u, fv.v, std::move(probe)};
}

double witness_derivative_numeric(const LindbladGenerator& gen, const DensityMatrix& rho0, const ProbeVector& psi) {
  return slope_at_start(rho0.matrix(), gen.apply(rho0.matrix()), psi);
}

double witness_derivative_numeric(const LindbladGenerator& gen, const InitialStateFrame& frame,
                                  const ProbeVector& psi) {
  const ComplexMatrix rho0 = frame.initial_state();
  return slope_at_start(frame.to_frame(rho0), frame.to_frame(gen.apply(rho0)), psi);
}

double witness_functional(const LindbladGenerator& gen, const InitialStateFrame& frame, const ProbeVector& psi,
                          double t) {
  const ComplexMatrix rho_t = evolve_matrix(gen, frame.initial_state(), t);
  return probe_expectation(partial_transpose_second(frame.to_frame(rho_t)), psi);
}

ComplexMatrix build_R() {
  constexpr cplx kI{0.0, 1.0};
  const ComplexMatrix p{{0.5, 0.5 * kI, 0.0}, {-0.5 * kI, 0.5, 0.0}, {0.0, 0.0, 0.0}};
  const ComplexMatrix q = ComplexMatrix::diagonal({-0.5, 0.5, 0.0});
  ComplexMatrix r(6);
  r.set_block(0, 0, p);
  r.set_block(0, 3, q);
  r.set_block(3, 0, q);
  r.set_block(3, 3, p);
  return r;
}

double witness_derivative_trace(const KossakowskiMatrix& d) { return (d.matrix() * build_R()).trace().real(); }

double witness_derivative_general(const ComplexMatrix& d_tilde, const InitialStateFrame& frame,
                                  const ProbeVector& psi) {
  if (d_tilde.dim() != 6) throw UsageError("witness_derivative_general expects a 6x6 D~");
  const auto w = pauli_w();
  // x = W Psi w: the top half rotates psi21 * w by calU, the bottom half -psi12 * w^* by calV.
  std::vector<cplx> x(6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      x[i] += frame.cal_u()(i, j) * psi.psi21() * w[j];
      x[i + 3] += frame.cal_v()(i, j) * (-psi.psi12()) * w[j + 3];
    }
  }
  // W is real, so w^dagger Psi^dagger W^T = x^dagger.
  return expectation(d_tilde, x).real();
}

}  // namespace qbath
