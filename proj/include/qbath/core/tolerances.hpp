#pragma once

namespace qbath::tol {

// Absolute tolerances; every matrix in scope has norm O(1).
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;

// Strictness margin of the creation criteria: "negative" means < -criterion.
inline constexpr double criterion = 1e-12;

}  // namespace qbath::tol
