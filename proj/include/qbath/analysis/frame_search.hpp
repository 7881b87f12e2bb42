#pragma once

#include <optional>

#include "qbath/analysis/criteria.hpp"

namespace qbath {

struct FrameSearchOptions {
  /// Maximum number of criterion evaluations.
  int budget = 1000;
  /// Restrict to |a1> = |b1> (U = V).
  bool same_state = false;
  /// Nelder-Mead iterations per local refinement.
  int refine_iterations = 200;
  double margin = tol::criterion;
};

struct FrameSearchResult {
  std::optional<InitialStateFrame> frame;
  std::optional<FrameAngles> angles;
  /// Criterion value lhs - rhs at the best frame seen.
  double best_margin = 0.0;
  int evaluations = 0;
  /// D~ (H12 = 0) PSD: a proof that no frame exists.
  bool d_tilde_psd = false;

  bool found() const { return frame.has_value(); }
};

/// Looks for an initial product state satisfying the creation condition.
///
/// Order: canonical frame, then a coarse grid over the Bloch angles (azimuth x polar)
/// of |a1> and |b1>, then Nelder-Mead refinement from the best grid points while budget
/// remains. The third Euler angle only rephases u and v and is fixed to 0. The grid
/// is 12 x 6 per qubit when the budget allows and shrinks (2k x k) otherwise so at least
/// half of the budget remains for refinement. Deterministic; the first success in this
/// order is returned. Not finding a frame proves nothing unless d_tilde_psd is set.
FrameSearchResult search_entangling_frame(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                          const FrameSearchOptions& options = {});

/// Per-qubit grid side k (grid is 2k azimuths x k polar angles) used for a given budget.
int frame_grid_side(int budget, bool same_state);

}  // namespace qbath
