#pragma once

#include <array>

#include "qbath/core/complex_matrix.hpp"
#include "qbath/core/qubit.hpp"

namespace qbath {

/// Euler angles (Z-Y-Z) of the two single-qubit unitaries: U = Rz(a) Ry(b) Rz(c).
struct FrameAngles {
  Vec3 first{};
  Vec3 second{};
};

ComplexMatrix su2_zyz(const Vec3& angles);

/// The SO(3) matrix R with U^dagger s_i U = sum_j R_ij s_j.
ComplexMatrix adjoint_rotation(const ComplexMatrix& u);

/// Product basis |a_i> = U|e_i>, |b_i> = V|e_i> of an initial state |a1 b1><a1 b1|,
/// with the induced rotations calU, calV.
class InitialStateFrame {
 public:
  /// Throws ValidationError unless U and V are 2x2 unitary within 1e-10.
  InitialStateFrame(ComplexMatrix u, ComplexMatrix v);
  static InitialStateFrame identity();
  static InitialStateFrame from_angles(const FrameAngles& angles);

  const ComplexMatrix& u() const { return u_; }
  const ComplexMatrix& v() const { return v_; }
  const ComplexMatrix& cal_u() const { return cal_u_; }
  const ComplexMatrix& cal_v() const { return cal_v_; }

  /// U (x) V
  ComplexMatrix local_unitary() const;
  /// |a1 b1><a1 b1| in the computational basis.
  ComplexMatrix initial_state() const;
  /// Expresses X in the |a_i b_j> basis: (U x V)^dagger X (U x V).
  ComplexMatrix to_frame(const ComplexMatrix& x) const;

 private:
  ComplexMatrix u_;
  ComplexMatrix v_;
  ComplexMatrix cal_u_;
  ComplexMatrix cal_v_;
};

/// w = (<+|s_i|->, <+|s_i|->^*) = (1, -i, 0, 1, i, 0).
std::array<cplx, 6> pauli_w();

/// Frame-dependent vectors u_i = sum_j calU_ij w_j and v_i = sum_j calV_ij w_j^*.
struct FrameVectors {
  std::array<cplx, 3> u;
  std::array<cplx, 3> v;
};

FrameVectors frame_vectors(const InitialStateFrame& frame);

}  // namespace qbath
