#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbath/scenario/example_bath.hpp"
#include "qbath/scenario/scan.hpp"

namespace qbath::cli {

/// Process exit codes.
enum ExitCode : int { ok = 0, parse_error = 2, cp_violation = 3, io_error = 4 };

struct GlobalOptions {
  double tol = tol::psd;
  bool allow_non_cp = false;
  /// Empty means standard output (or the command's default file).
  std::string output;
};

/// Either a config file or the built-in two-parameter example bath.
struct GeneratorSource {
  std::optional<std::string> config_path;
  std::optional<ExampleBathParams> example;

  std::string describe() const;
};

GeneratorConfig load_source(const GeneratorSource& source);

struct EvolveRequest {
  GeneratorSource source;
  std::optional<std::pair<Vec3, Vec3>> bloch;
  /// 16 complex entries, row-major, re/im interleaved.
  std::optional<std::vector<double>> rho_entries;
  std::vector<double> times;
};

/// Writes: t, 16 entries of rho(t) (re/im interleaved, row-major), trace, purity,
/// ppt_min_eigenvalue, negativity.
void cmd_evolve(const EvolveRequest& request, const GlobalOptions& global, std::ostream& out);

void cmd_check(const GeneratorSource& source, int budget, const GlobalOptions& global, std::ostream& out);

struct ScanRequest {
  ScanOptions scan;
  std::string csv_path = "scan.csv";
  /// Defaults to csv_path with an .svg extension.
  std::string svg_path;
  SvgOptions svg;
};

void cmd_scan(const ScanRequest& request, const GlobalOptions& global, std::ostream& log);

/// A = B = C collective-fluorescence bath built from the config's A block.
void cmd_fluorescence(const GeneratorSource& source, int budget, const GlobalOptions& global, std::ostream& out);

/// Full command line (argv[0] included). Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbath::cli
