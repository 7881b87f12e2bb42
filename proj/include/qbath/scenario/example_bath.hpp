#pragma once

// Two-parameter bath with A = C = [[1, -ia, 0], [ia, 1, 0], [0, 0, 0]], B = diag(b, -b, 0).
// D is PSD iff a^2 + b^2 <= 1; D~ is PSD iff |a + b| <= 1 and |a - b| <= 1.

#include "qbath/scenario/config.hpp"

namespace qbath {

/// Distance below which a point is treated as lying on a region boundary.
inline constexpr double kBoundaryTol = 1e-9;

struct ExampleBathParams {
  double a = 0.0;
  double b = 0.0;

  bool cp_valid() const { return a * a + b * b <= 1.0 + kBoundaryTol; }
};

struct ExampleBathBlocks {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
};

ExampleBathBlocks example_bath_blocks(const ExampleBathParams& p);

/// Throws CpViolation outside the unit disk unless allow_non_cp.
KossakowskiMatrix example_bath(const ExampleBathParams& p, bool allow_non_cp = false);

GeneratorConfig example_bath_config(const ExampleBathParams& p);

}  // namespace qbath
