#include "qbath/scenario/scan.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "qbath/analysis/frame_search.hpp"
#include "qbath/scenario/csv.hpp"

namespace qbath {

namespace {

constexpr const char* kHeader =
    "a,b,cp_valid,dtilde_psd,canonical_derivative,creates_canonical,creates_any_frame,search_budget_used";

const char* flag(bool b) { return b ? "true" : "false"; }

bool parse_flag(const std::string& s, std::size_t line, std::size_t column) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(line, column, "expected true/false, got '" + s + "'");
}

}  // namespace

double scan_coordinate(int i, int resolution) {
  if (i == resolution - 1) return 1.0;
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(resolution - 1);
}

ScanRecord scan_point(const ExampleBathParams& p, const ScanOptions& options) {
  ScanRecord r;
  r.a = p.a;
  r.b = p.b;
  r.cp_valid = p.cp_valid();
  const auto blocks = example_bath_blocks(p);
  const KossakowskiMatrix d = KossakowskiMatrix::unchecked(blocks.a, blocks.b, blocks.c);
  r.canonical_derivative = witness_derivative_trace(d);
  r.dtilde_psd = remark4_exemption(d, options.psd_tol).d_tilde_psd;
  if (!r.cp_valid || r.dtilde_psd) return r;

  r.creates_canonical = creation_condition(blocks.a, blocks.b, blocks.c, InitialStateFrame::identity());
  if (r.creates_canonical) {
    r.creates_any_frame = true;
    r.search_budget_used = 1;
    return r;
  }
  FrameSearchOptions search;
  search.budget = options.budget;
  const auto found = search_entangling_frame(blocks.a, blocks.b, blocks.c, search);
  r.creates_any_frame = found.found();
  r.search_budget_used = found.evaluations;
  return r;
}

std::vector<ScanRecord> run_scan(const ScanOptions& options) {
  if (options.resolution < 3) throw UsageError("scan resolution must be at least 3");
  const int n = options.resolution;
  std::vector<ScanRecord> records(static_cast<std::size_t>(n) * n);
  std::atomic<int> next_row{0};
  const auto worker = [&] {
    for (int i = next_row++; i < n; i = next_row++) {
      for (int j = 0; j < n; ++j) {
        records[static_cast<std::size_t>(i) * n + j] =
            scan_point({scan_coordinate(i, n), scan_coordinate(j, n)}, options);
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return records;
}

ScanRegion classify(const ScanRecord& r) {
  if (!r.cp_valid) return ScanRegion::outside_disk;
  if (r.dtilde_psd) return ScanRegion::no_creation;
  if (r.creates_canonical) return ScanRegion::canonical_creation;
  if (r.creates_any_frame) return ScanRegion::searched_creation;
  return ScanRegion::undetermined;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << kHeader << '\n';
  for (const auto& r : records) {
    out << csv::format_double(r.a) << ',' << csv::format_double(r.b) << ',' << flag(r.cp_valid) << ','
        << flag(r.dtilde_psd) << ',' << csv::format_double(r.canonical_derivative) << ',' << flag(r.creates_canonical)
        << ',' << flag(r.creates_any_frame) << ',' << r.search_budget_used << '\n';
  }
}

std::vector<ScanRecord> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw ParseError(1, 1, "unexpected scan CSV header");
  std::vector<ScanRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = csv::split(line);
    if (f.size() != 8) throw ParseError(line_no, 1, "expected 8 fields");
    try {
      ScanRecord r;
      r.a = csv::parse_double(f[0]);
      r.b = csv::parse_double(f[1]);
      r.cp_valid = parse_flag(f[2], line_no, 3);
      r.dtilde_psd = parse_flag(f[3], line_no, 4);
      r.canonical_derivative = csv::parse_double(f[4]);
      r.creates_canonical = parse_flag(f[5], line_no, 6);
      r.creates_any_frame = parse_flag(f[6], line_no, 7);
      r.search_budget_used = std::stoll(f[7]);
      out.push_back(r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  return out;
}

}  // namespace qbath
