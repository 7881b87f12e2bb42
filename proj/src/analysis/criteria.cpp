#include "qbath/analysis/criteria.hpp"

#include <cmath>

#include "qbath/core/eigen.hpp"
#include "qbath/dynamics/pt_generator.hpp"

namespace qbath {

namespace {

cplx bra_ket(std::span<const cplx> x, const ComplexMatrix& m, std::span<const cplx> y) {
  return inner(x, m.apply(y));
}

bool is_zero(const ComplexMatrix& m, double tol) { return max_abs(m) <= tol; }

bool is_symmetric(const ComplexMatrix& m, double tol) { return max_abs_diff(m, m.transpose()) <= tol; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::creates: return "creates";
    case Verdict::no_creation: return "no_creation";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

CreationCondition evaluate_creation_condition(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                              const InitialStateFrame& frame, double margin) {
  const auto fv = frame_vectors(frame);
  const double uau = bra_ket(fv.u, a, fv.u).real();
  const double vcv = bra_ket(fv.v, c.transpose(), fv.v).real();
  const double cross = std::norm(bra_ket(fv.u, b.real_part(), fv.v));
  CreationCondition out{uau * vcv, cross, Verdict::indeterminate};
  if (out.margin() < -margin) {
    out.verdict = Verdict::creates;
  } else if (out.margin() > margin) {
    out.verdict = Verdict::no_creation;
  }
  return out;
}

bool creation_condition(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                        const InitialStateFrame& frame, double margin) {
  return evaluate_creation_condition(a, b, c, frame, margin).verdict == Verdict::creates;
}

ProbeOptimum probe_optimum_consistency(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                       const InitialStateFrame& frame, double margin) {
  constexpr cplx kI{0.0, 1.0};
  const ComplexMatrix d_tilde = build_d_tilde(a, b, c);
  const auto slope = [&](cplx psi21, cplx psi12) {
    return witness_derivative_general(d_tilde, frame, ProbeVector::normalized(0.0, psi12, psi21, 0.0));
  };
  // q(x) = x^dagger K x with x = (psi21, psi12); polarization from four probes.
  const double k11 = slope(1.0, 0.0);
  const double k22 = slope(0.0, 1.0);
  const double mean = 0.5 * (k11 + k22);
  const double re_k12 = slope(1.0, 1.0) - mean;
  const double im_k12 = -(slope(1.0, kI) - mean);
  const cplx k12{re_k12, im_k12};

  const double half_gap = 0.5 * (k11 - k22);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(k12));
  const double lambda = mean - radius;

  // (K - lambda) x = 0; pick the better-conditioned of the two row equations.
  cplx x1, x2;
  if (radius == 0.0) {
    x1 = 1.0;
    x2 = 0.0;
  } else if (std::abs(k11 - lambda) >= std::abs(k22 - lambda)) {
    x1 = -k12;
    x2 = k11 - lambda;
  } else {
    x1 = k22 - lambda;
    x2 = -std::conj(k12);
  }
  ProbeOptimum out;
  out.minimum = lambda;
  out.creates = lambda < -margin;
  out.best_probe = ProbeVector::normalized(0.0, x2, x1, 0.0);
  return out;
}

ExemptionReport remark4_exemption(const KossakowskiMatrix& d, double tol) {
  const ComplexMatrix re_b = d.b().real_part();
  const ComplexMatrix im_b = d.b().imag_part();
  const bool a_sym = is_symmetric(d.a(), tol::herm);
  const bool c_sym = is_symmetric(d.c(), tol::herm);

  ExemptionReport r;
  r.b_zero = is_zero(d.b(), tol::herm);
  r.re_b_zero = is_zero(re_b, tol::herm);
  r.im_b_zero_and_symmetric = is_zero(im_b, tol::herm) && (a_sym || c_sym);
  r.symmetric_blocks = a_sym && c_sym;
  r.d_tilde_spectrum = hermitian_eigenvalues(build_d_tilde(d.a(), d.b(), d.c()), true);
  r.d_tilde_psd = r.d_tilde_spectrum.front() >= -tol;
  return r;
}

}  // namespace qbath
