#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "qbath/core/tolerances.hpp"
#include "qbath/scenario/example_bath.hpp"

namespace qbath {

struct ScanRecord {
  double a = 0.0;
  double b = 0.0;
  bool cp_valid = false;
  bool dtilde_psd = false;
  /// Tr[D R]
  double canonical_derivative = 0.0;
  /// Creation condition holds at the canonical |++> frame.
  bool creates_canonical = false;
  /// Canonical frame or a searched frame satisfies the creation condition.
  bool creates_any_frame = false;
  std::int64_t search_budget_used = 0;
};

struct ScanOptions {
  int resolution = 201;
  int budget = 1000;
  double psd_tol = tol::psd;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Classifies one (a, b). Outside the disk only the algebraic columns are filled.
/// D~ PSD certifies no creation, so the frame search is skipped there.
ScanRecord scan_point(const ExampleBathParams& p, const ScanOptions& options);

/// Uniform grid over [-1, 1]^2, records in row-major order (a slow, b fast),
/// independent of how the work was scheduled.
std::vector<ScanRecord> run_scan(const ScanOptions& options);

/// Grid coordinate i of n over [-1, 1].
double scan_coordinate(int i, int resolution);

enum class ScanRegion { outside_disk, no_creation, canonical_creation, searched_creation, undetermined };

ScanRegion classify(const ScanRecord& r);

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);
/// Throws ParseError on malformed input.
std::vector<ScanRecord> read_scan_csv(std::istream& in);

struct SvgOptions {
  int width = 800;
  int height = 800;
};

void write_scan_svg(std::ostream& out, const std::vector<ScanRecord>& records, int resolution,
                    const SvgOptions& options = {});

}  // namespace qbath
