#pragma once

#include <string>
#include <vector>

#include "qbath/analysis/witness.hpp"
#include "qbath/core/tolerances.hpp"
#include "qbath/dynamics/kossakowski.hpp"

namespace qbath {

/// Outcome of a first-order test. A vanishing slope is never reported as creation.
enum class Verdict { creates, no_creation, indeterminate };

std::string_view to_string(Verdict v);

/// Probe-independent creation test <u|A|u><v|C^T|v> < |<u|Re B|v>|^2 for one frame.
struct CreationCondition {
  double lhs = 0.0;  ///< <u|A|u> <v|C^T|v>
  double rhs = 0.0;  ///< |<u|Re B|v>|^2
  Verdict verdict = Verdict::indeterminate;

  /// lhs - rhs; negative means creation.
  double margin() const { return lhs - rhs; }
};

CreationCondition evaluate_creation_condition(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                              const InitialStateFrame& frame, double margin = tol::criterion);

/// True iff the inequality holds with margin.
bool creation_condition(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                        const InitialStateFrame& frame, double margin = tol::criterion);

/// Minimum of the general slope formula over normalized probes with psi11 = psi22 = 0.
struct ProbeOptimum {
  bool creates = false;       ///< minimum < -margin
  double minimum = 0.0;
  ProbeVector best_probe = ProbeVector::creation(1.0, 1.0);
};

/// Recovers the 2x2 Hermitian form in (psi21, psi12) by evaluating the general
/// slope at four probes, then minimizes it by eigen-decomposition. Shares no
/// algebra with `creation_condition`, which makes it a cross-check for it.
ProbeOptimum probe_optimum_consistency(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                       const InitialStateFrame& frame, double margin = tol::criterion);

/// Structural cases in which the bath cannot create entanglement.
struct ExemptionReport {
  bool b_zero = false;                 ///< case 1: B = 0
  bool re_b_zero = false;              ///< case 2: Re(B) = 0
  bool im_b_zero_and_symmetric = false;  ///< case 3: Im(B) = 0 and (C^T = C or A^T = A)
  bool symmetric_blocks = false;       ///< case 4: A^T = A and C^T = C
  bool d_tilde_psd = false;            ///< D~ (with H12 = 0) is PSD
  std::vector<double> d_tilde_spectrum;

  bool any_case() const { return b_zero || re_b_zero || im_b_zero_and_symmetric || symmetric_blocks; }
  /// Any case or the D~ certificate rules out creation from every product state.
  bool no_creation_certified() const { return any_case() || d_tilde_psd; }
};

ExemptionReport remark4_exemption(const KossakowskiMatrix& d, double tol = tol::psd);

}  // namespace qbath
