#include "qbath/scenario/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "qbath/analysis/frame_search.hpp"
#include "qbath/core/eigen.hpp"
#include "qbath/dynamics/pt_generator.hpp"
#include "qbath/scenario/csv.hpp"

namespace qbath::cli {

namespace {

void to_destination(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << (std::abs(x) < 1e-15 ? 0.0 : x);
  return s.str();
}

std::string fmt_list(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + fmt(xs[i]);
  return out + "]";
}

std::string fmt_angles(const FrameAngles& fa) {
  std::ostringstream s;
  s << "U(zyz) = (" << fmt(fa.first[0]) << ", " << fmt(fa.first[1]) << ", " << fmt(fa.first[2]) << "), V(zyz) = ("
    << fmt(fa.second[0]) << ", " << fmt(fa.second[1]) << ", " << fmt(fa.second[2]) << ")";
  return s.str();
}

std::string fmt_ket(const ComplexMatrix& u) {
  std::ostringstream s;
  s << "(" << fmt(u(0, 0).real()) << (u(0, 0).imag() < 0 ? "-" : "+") << fmt(std::abs(u(0, 0).imag())) << "i, "
    << fmt(u(1, 0).real()) << (u(1, 0).imag() < 0 ? "-" : "+") << fmt(std::abs(u(1, 0).imag())) << "i)";
  return s.str();
}

ComplexMatrix initial_state(const EvolveRequest& request) {
  if (request.rho_entries) {
    const auto& e = *request.rho_entries;
    if (e.size() != 32) throw UsageError("--rho needs 32 numbers (16 complex entries, re/im interleaved)");
    std::vector<cplx> entries(16);
    for (std::size_t k = 0; k < 16; ++k) entries[k] = cplx(e[2 * k], e[2 * k + 1]);
    return DensityMatrix(ComplexMatrix(4, std::move(entries))).matrix();
  }
  if (request.bloch) {
    for (const auto& r : {request.bloch->first, request.bloch->second}) {
      if (std::hypot(r[0], r[1], r[2]) > 1.0 + 1e-12) throw ValidationError("Bloch vector longer than 1");
    }
    return DensityMatrix::product(request.bloch->first, request.bloch->second).matrix();
  }
  throw UsageError("evolve needs an initial state (--bloch1/--bloch2 or --rho)");
}

}  // namespace

std::string GeneratorSource::describe() const {
  if (example) return "example bath a = " + fmt(example->a) + ", b = " + fmt(example->b);
  if (config_path) return *config_path;
  return "(none)";
}

GeneratorConfig load_source(const GeneratorSource& source) {
  if (source.example) return example_bath_config(*source.example);
  if (source.config_path) return load_config(*source.config_path);
  throw UsageError("no generator given: pass a config path or --example-bath A B");
}

void cmd_evolve(const EvolveRequest& request, const GlobalOptions& global, std::ostream& out) {
  const GeneratorConfig config = load_source(request.source);
  const LindbladGenerator gen = to_generator(config, global.allow_non_cp, global.tol);
  const ComplexMatrix rho0 = initial_state(request);
  if (request.times.empty()) throw UsageError("evolve needs at least one time");
  for (double t : request.times)
    if (!(t >= 0.0)) throw UsageError("evolution times must be nonnegative");

  const ComplexMatrix m = superoperator(gen);
  to_destination(global.output, out, [&](std::ostream& os) {
    std::vector<std::string> header{"t"};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        header.push_back("rho_" + std::to_string(i) + std::to_string(j) + "_re");
        header.push_back("rho_" + std::to_string(i) + std::to_string(j) + "_im");
      }
    for (const char* name : {"trace", "purity", "ppt_min_eigenvalue", "negativity"}) header.emplace_back(name);
    os << csv::join(header) << '\n';
    for (double t : request.times) {
      const ComplexMatrix rho = t == 0.0 ? rho0 : Propagator(m, t).apply(rho0);
      std::vector<std::string> row{csv::format_double(t)};
      for (const auto& z : rho.entries()) {
        row.push_back(csv::format_double(z.real()));
        row.push_back(csv::format_double(z.imag()));
      }
      row.push_back(csv::format_double(rho.trace().real()));
      row.push_back(csv::format_double((rho * rho).trace().real()));
      row.push_back(csv::format_double(ppt_min_eigenvalue(rho)));
      row.push_back(csv::format_double(negativity(rho)));
      os << csv::join(row) << '\n';
    }
  });
}

void cmd_check(const GeneratorSource& source, int budget, const GlobalOptions& global, std::ostream& out) {
  const GeneratorConfig config = load_source(source);
  const KossakowskiMatrix d = to_kossakowski(config, global.allow_non_cp, global.tol);
  const bool cp = d.is_cp(global.tol);
  const ExemptionReport ex = remark4_exemption(d, global.tol);
  const double slope = witness_derivative_trace(d);
  const CreationCondition canonical = evaluate_creation_condition(d.a(), d.b(), d.c(), InitialStateFrame::identity());

  bool h12_nonzero = false;
  for (const auto& row : config.hamiltonian.h12)
    for (double x : row) h12_nonzero |= x != 0.0;

  std::optional<FrameSearchResult> search;
  if (!ex.no_creation_certified()) {
    FrameSearchOptions opts;
    opts.budget = budget;
    search = search_entangling_frame(d.a(), d.b(), d.c(), opts);
  }

  to_destination(global.output, out, [&](std::ostream& os) {
    os << "generator: " << source.describe() << '\n';
    os << "complete positivity: " << (cp ? "yes" : "NO") << " (min eigenvalue of D = " << fmt(d.min_eigenvalue())
       << ")\n";
    os << "D~ spectrum: " << fmt_list(ex.d_tilde_spectrum) << '\n';
    os << "D~ positive: " << (ex.d_tilde_psd ? "yes" : "no") << '\n';
    os << "exemptions: B = 0: " << (ex.b_zero ? "yes" : "no") << "; Re(B) = 0: " << (ex.re_b_zero ? "yes" : "no")
       << "; Im(B) = 0 with A or C symmetric: " << (ex.im_b_zero_and_symmetric ? "yes" : "no")
       << "; A and C symmetric: " << (ex.symmetric_blocks ? "yes" : "no") << '\n';
    if (h12_nonzero) os << "note: H12 is nonzero; the creation criteria below ignore its contribution to D~\n";
    os << "canonical frame |++>: Tr[D R] = " << fmt(slope) << "; <u|A|u><v|C^T|v> = " << fmt(canonical.lhs)
       << ", |<u|Re B|v>|^2 = " << fmt(canonical.rhs) << " -> " << to_string(canonical.verdict) << '\n';
    if (search) {
      if (search->found()) {
        os << "frame search: found after " << search->evaluations << " evaluations at " << fmt_angles(*search->angles)
           << "; |a1> = " << fmt_ket(search->frame->u()) << ", |b1> = " << fmt_ket(search->frame->v())
           << "; margin " << fmt(search->best_margin) << '\n';
      } else {
        os << "frame search: none found in " << search->evaluations << " evaluations (best margin "
           << fmt(search->best_margin) << ")\n";
      }
    } else {
      os << "frame search: skipped (no creation certified)\n";
    }

    os << "verdict: ";
    if (ex.d_tilde_psd) {
      os << "D~ PSD; no creation possible\n";
    } else if (ex.any_case()) {
      os << "structural exemption; no creation possible\n";
    } else if (canonical.verdict == Verdict::creates && slope < 0.0) {
      os << "creation at canonical frame; d/dt E(0) = " << fmt(slope) << '\n';
    } else if (canonical.verdict == Verdict::creates) {
      const ProbeOptimum best = probe_optimum_consistency(d.a(), d.b(), d.c(), InitialStateFrame::identity());
      os << "creation at canonical frame with optimal probe; d/dt E(0) = " << fmt(best.minimum) << '\n';
    } else if (search && search->found()) {
      os << "creation at searched frame\n";
    } else {
      os << "undetermined (no frame found within budget; D~ not PSD)\n";
    }
  });
}

void cmd_scan(const ScanRequest& request, const GlobalOptions& global, std::ostream& log) {
  ScanOptions opts = request.scan;
  opts.psd_tol = global.tol;
  std::string svg_path = request.svg_path;
  if (svg_path.empty()) {
    const auto dot = request.csv_path.rfind('.');
    const auto slash = request.csv_path.rfind('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    svg_path = (has_ext ? request.csv_path.substr(0, dot) : request.csv_path) + ".svg";
  }
  // Fail on unwritable destinations before spending minutes on the scan.
  for (const auto& path : {request.csv_path, svg_path}) {
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw IoError("cannot open '" + path + "' for writing");
  }
  const auto records = run_scan(opts);
  to_destination(request.csv_path, log, [&](std::ostream& os) { write_scan_csv(os, records); });
  to_destination(svg_path, log, [&](std::ostream& os) { write_scan_svg(os, records, opts.resolution, request.svg); });

  std::size_t counts[5] = {};
  for (const auto& r : records) ++counts[static_cast<int>(classify(r))];
  log << "scan " << opts.resolution << "x" << opts.resolution << " (budget " << opts.budget << "): "
      << counts[0] << " outside disk, " << counts[1] << " D~ positive, " << counts[2] << " canonical creation, "
      << counts[3] << " searched creation, " << counts[4] << " unresolved\n"
      << "wrote " << request.csv_path << " and " << svg_path << '\n';
}

void cmd_fluorescence(const GeneratorSource& source, int budget, const GlobalOptions& global, std::ostream& out) {
  const GeneratorConfig config = load_source(source);
  const ComplexMatrix a = config.a.matrix();
  if (!is_hermitian(a, tol::herm)) throw ValidationError("block A is not Hermitian");
  const KossakowskiMatrix d =
      global.allow_non_cp ? KossakowskiMatrix::unchecked(a, a, a) : KossakowskiMatrix::checked(a, a, a, global.tol);
  const ComplexMatrix im_a = a.imag_part();
  const bool real = max_abs(im_a) <= tol::herm;

  to_destination(global.output, out, [&](std::ostream& os) {
    os << "generator: A = B = C from " << source.describe() << '\n';
    os << "complete positivity: " << (d.is_cp(global.tol) ? "yes" : "NO") << '\n';
    if (real) {
      const ComplexMatrix s6 = pt_sign_matrix_6();
      const double lo = min_eigenvalue(s6 * build_d_tilde(a, a, a) * s6);
      os << "Im(A) = 0\n";
      os << "min eigenvalue of S D~ S = " << fmt(lo) << '\n';
      os << "verdict: no creation; rho~ evolves completely positively\n";
      return;
    }
    FrameSearchOptions opts;
    opts.budget = budget;
    opts.same_state = true;
    const auto found = search_entangling_frame(a, a, a, opts);
    os << "Im(A) != 0 (max |Im A_ij| = " << fmt(max_abs(im_a)) << ")\n";
    if (!found.found()) {
      os << "verdict: no frame with |a1> = |b1> found in " << found.evaluations << " evaluations\n";
      return;
    }
    const auto fv = frame_vectors(*found.frame);
    const double im_form = std::norm(expectation(im_a, fv.u));
    const auto cond = evaluate_creation_condition(a, a, a, *found.frame);
    os << "creation frame: |a1> = |b1> = " << fmt_ket(found.frame->u()) << " (" << fmt_angles(*found.angles) << ")\n";
    os << "|<u|Im(A)|u>|^2 = " << fmt(im_form) << "; <u|A|u><v|A^T|v> = " << fmt(cond.lhs)
       << " < |<u|Re A|v>|^2 = " << fmt(cond.rhs) << '\n';
    os << "verdict: creation frame found\n";
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement creation by a common Markovian bath acting on two qubits"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--tol", global.tol, "PSD tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--allow-non-cp", global.allow_non_cp, "accept a Kossakowski matrix that is not PSD");
  app.add_option("--output", global.output, "output file (default: stdout, or scan.csv for scan)");

  GeneratorSource source;
  std::string config_path;
  std::vector<double> example;
  const auto add_source = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "generator config file");
    sub->add_option("--example-bath", example, "use the two-parameter example bath")->expected(2);
  };

  EvolveRequest evolve;
  std::vector<double> bloch1, bloch2, rho, times;
  double t_max = 1.0;
  int steps = 10;
  auto* ev = app.add_subcommand("evolve", "evolve an initial state and tabulate PPT diagnostics");
  add_source(ev);
  ev->add_option("--bloch1", bloch1, "Bloch vector of qubit 1 (x,y,z)")->delimiter(',')->expected(3);
  ev->add_option("--bloch2", bloch2, "Bloch vector of qubit 2 (x,y,z)")->delimiter(',')->expected(3);
  ev->add_option("--rho", rho, "16 complex entries, row-major, re,im interleaved")->delimiter(',');
  ev->add_option("--times", times, "comma-separated times")->delimiter(',');
  ev->add_option("--t-max", t_max, "final time of a uniform grid");
  ev->add_option("--steps", steps, "intervals of the uniform grid")->check(CLI::PositiveNumber);

  int budget = 1000;
  auto* check = app.add_subcommand("check", "report positivity, exemptions and creation criteria");
  add_source(check);
  check->add_option("--budget", budget, "frame search evaluations")->check(CLI::PositiveNumber);

  ScanRequest scan;
  auto* sc = app.add_subcommand("scan", "classify the example bath over [-1,1]^2");
  sc->add_option("--resolution", scan.scan.resolution, "grid points per axis")->check(CLI::Range(3, 100000));
  sc->add_option("--budget", scan.scan.budget, "frame search evaluations per point")->check(CLI::PositiveNumber);
  sc->add_option("--svg", scan.svg_path, "SVG heatmap path (default: CSV path with .svg)");
  sc->add_option("--threads", scan.scan.threads, "worker threads (0 = all cores)");
  sc->add_option("--width", scan.svg.width, "SVG width")->check(CLI::PositiveNumber);
  sc->add_option("--height", scan.svg.height, "SVG height")->check(CLI::PositiveNumber);

  int fluor_budget = 1000;
  auto* fl = app.add_subcommand("fluorescence", "A = B = C bath built from the config's A block");
  add_source(fl);
  fl->add_option("--budget", fluor_budget, "frame search evaluations")->check(CLI::PositiveNumber);

  for (auto* sub : {ev, check, sc, fl}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }

  if (!config_path.empty()) source.config_path = config_path;
  if (!example.empty()) source.example = ExampleBathParams{example[0], example[1]};

  try {
    if (*ev) {
      evolve.source = source;
      if (!bloch1.empty() || !bloch2.empty()) {
        if (bloch1.size() != 3 || bloch2.size() != 3) throw UsageError("--bloch1 and --bloch2 go together");
        evolve.bloch = std::pair{Vec3{bloch1[0], bloch1[1], bloch1[2]}, Vec3{bloch2[0], bloch2[1], bloch2[2]}};
      }
      if (!rho.empty()) evolve.rho_entries = rho;
      if (!times.empty()) {
        evolve.times = times;
      } else {
        for (int k = 0; k <= steps; ++k) evolve.times.push_back(t_max * k / steps);
      }
      cmd_evolve(evolve, global, out);
    } else if (*check) {
      cmd_check(source, budget, global, out);
    } else if (*sc) {
      if (!global.output.empty()) scan.csv_path = global.output;
      cmd_scan(scan, global, out);
    } else if (*fl) {
      cmd_fluorescence(source, fluor_budget, global, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const CpViolation& e) {
    err << "not completely positive: " << e.what() << " (use --allow-non-cp to proceed)\n";
    return cp_violation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return io_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }
  return ok;
}

}  // namespace qbath::cli
