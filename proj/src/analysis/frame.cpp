#include "qbath/analysis/frame.hpp"

#include <cmath>

#include "qbath/core/errors.hpp"

namespace qbath {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_unitary(const ComplexMatrix& m, const char* which) {
  if (m.dim() != 2) throw ValidationError(std::string(which) + " must be 2x2");
  if (max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(2)) > 1e-10)
    throw ValidationError(std::string(which) + " is not unitary");
}

}  // namespace

ComplexMatrix su2_zyz(const Vec3& angles) {
  const auto rz = [](double t) {
    return ComplexMatrix::diagonal({std::exp(-kI * (t / 2.0)), std::exp(kI * (t / 2.0))});
  };
  const double c = std::cos(angles[1] / 2.0);
  const double s = std::sin(angles[1] / 2.0);
  const ComplexMatrix ry{{c, -s}, {s, c}};
  return rz(angles[0]) * ry * rz(angles[2]);
}

ComplexMatrix adjoint_rotation(const ComplexMatrix& u) {
  ComplexMatrix r(3);
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix rotated = u.adjoint() * pauli(i) * u;
    for (int j = 1; j <= 3; ++j) r(i - 1, j - 1) = 0.5 * (rotated * pauli(j)).trace().real();
  }
  return r;
}

InitialStateFrame::InitialStateFrame(ComplexMatrix u, ComplexMatrix v) : u_(std::move(u)), v_(std::move(v)) {
  require_unitary(u_, "U");
  require_unitary(v_, "V");
  cal_u_ = adjoint_rotation(u_);
  cal_v_ = adjoint_rotation(v_);
}

InitialStateFrame InitialStateFrame::identity() {
  return InitialStateFrame(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
}

InitialStateFrame InitialStateFrame::from_angles(const FrameAngles& angles) {
  return InitialStateFrame(su2_zyz(angles.first), su2_zyz(angles.second));
}

ComplexMatrix InitialStateFrame::local_unitary() const { return kron(u_, v_); }

ComplexMatrix InitialStateFrame::initial_state() const {
  const std::vector<cplx> a1{u_(0, 0), u_(1, 0)};
  const std::vector<cplx> b1{v_(0, 0), v_(1, 0)};
  const auto ab = kron(a1, b1);
  return ComplexMatrix::outer(ab, ab);
}

ComplexMatrix InitialStateFrame::to_frame(const ComplexMatrix& x) const {
  const ComplexMatrix w = local_unitary();
  return w.adjoint() * x * w;
}

std::array<cplx, 6> pauli_w() {
  std::array<cplx, 6> w{};
  for (int i = 1; i <= 3; ++i) {
    w[i - 1] = pauli(i)(0, 1);  // <+| s_i |->
    w[i + 2] = std::conj(w[i - 1]);
  }
  return w;
}

FrameVectors frame_vectors(const InitialStateFrame& frame) {
  const auto w = pauli_w();
  FrameVectors out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.u[i] += frame.cal_u()(i, j) * w[j];
      out.v[i] += frame.cal_v()(i, j) * std::conj(w[j]);
    }
  }
  return out;
}

}  // namespace qbath
