#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbath/scenario/commands.hpp"
#include "qbath/scenario/csv.hpp"

using namespace qbath;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qbath");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qbath-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) rows.push_back(csv::split(line));
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
}

}  // namespace

TEST_CASE("check reports") {
  const auto inside = run_cli({"check", "--example-bath", "0.5", "0.4"});
  CHECK(inside.code == cli::ok);
  CHECK(inside.out.find("D~ PSD; no creation possible") != std::string::npos);

  const auto canonical = run_cli({"check", "--example-bath", "0.9", "0.3"});
  CHECK(canonical.code == cli::ok);
  CHECK(canonical.out.find("creation at canonical frame; d/dt E(0) = -0.4") != std::string::npos);

  const auto searched = run_cli({"check", "--example-bath", "0.9", "-0.3", "--budget", "500"});
  CHECK(searched.out.find("frame search: found") != std::string::npos);
  CHECK(searched.out.find("U(zyz)") != std::string::npos);
  CHECK(searched.out.find("D~ spectrum") != std::string::npos);

  const auto real_fluor = write_file("real.cfg",
                                     "[kossakowski.A.re]\n1 0 0\n0 1 0\n0 0 0\n"
                                     "[kossakowski.B.re]\n1 0 0\n0 1 0\n0 0 0\n"
                                     "[kossakowski.C.re]\n1 0 0\n0 1 0\n0 0 0\n");
  const auto real = run_cli({"check", real_fluor});
  CHECK(real.code == cli::ok);
  CHECK(real.out.find("no creation possible") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"check", "--example-bath", "0.9", "0.9"}).code == cli::cp_violation);
  CHECK(run_cli({"check", "--example-bath", "0.9", "0.9", "--allow-non-cp"}).code == cli::ok);
  CHECK(run_cli({"--allow-non-cp", "check", "--example-bath", "0.9", "0.9"}).code == cli::ok);
  const auto bad = run_cli({"check", write_file("bad.cfg", "[hamiltonian]\nh1 = 1 2\n")});
  CHECK(bad.code == cli::parse_error);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run_cli({"check", "/nonexistent/x.cfg"}).code == cli::io_error);
  CHECK(run_cli({"frobnicate"}).code == cli::parse_error);
  CHECK(run_cli({"check"}).code == cli::parse_error);
  CHECK(run_cli({"--help"}).code == cli::ok);
  CHECK(run_cli({"check", "--example-bath", "0.5", "0.4", "--output", "/nonexistent/dir/out.txt"}).code ==
        cli::io_error);
  CHECK(run_cli({"scan", "--resolution", "3", "--output", "/nonexistent/dir/scan.csv"}).code == cli::io_error);
  CHECK(run_cli({"scan", "--resolution", "2"}).code == cli::parse_error);
}

TEST_CASE("evolve tables") {
  const auto zero = write_file("zero.cfg", "[hamiltonian]\nh1 = 0 0 0\n");
  const auto idle = run_cli({"evolve", zero, "--bloch1", "0.3,0.1,0.2", "--bloch2", "0,0,-1", "--times", "0,1"});
  REQUIRE(idle.code == cli::ok);
  auto rows = csv_rows(idle.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].size() == 1 + 32 + 4);
  CHECK(rows[0][0] == "t");
  CHECK(std::vector(rows[1].begin() + 1, rows[1].end()) == std::vector(rows[2].begin() + 1, rows[2].end()));

  const auto bath = run_cli({"evolve", "--example-bath", "0.8", "0.6", "--bloch1", "0,0,1", "--bloch2", "0,0,1",
                             "--times", "0,0.001,0.01"});
  REQUIRE(bath.code == cli::ok);
  rows = csv_rows(bath.out);
  const auto ppt = column(rows[0], "ppt_min_eigenvalue");
  CHECK(csv::parse_double(rows[1][ppt]) >= 0.0);
  CHECK(csv::parse_double(rows[2][ppt]) < 0.0);
  CHECK(csv::parse_double(rows[3][ppt]) < 0.0);

  const auto no_b = write_file("no_b.cfg",
                               "[hamiltonian]\nh1 = 0.3 0 0.2\n"
                               "[kossakowski.A.re]\n1 0 0\n0 1 0\n0 0 1\n"
                               "[kossakowski.A.im]\n0 -0.5 0\n0.5 0 0\n0 0 0\n"
                               "[kossakowski.C.re]\n1 0 0\n0 0.5 0\n0 0 0\n");
  const auto sep = run_cli({"evolve", no_b, "--bloch1", "1,0,0", "--bloch2", "0,1,0", "--t-max", "2", "--steps", "20"});
  REQUIRE(sep.code == cli::ok);
  rows = csv_rows(sep.out);
  CHECK(rows.size() == 22);
  const auto neg = column(rows[0], "negativity");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(csv::parse_double(rows[i][neg]) <= 1e-10);

  std::string rho = "0.25,0";
  for (int k = 1; k < 16; ++k) rho += k % 5 == 0 ? ",0.25,0" : ",0,0";
  CHECK(run_cli({"evolve", "--example-bath", "0.1", "0.2", "--rho", rho, "--times", "0.5"}).code == cli::ok);
  CHECK(run_cli({"evolve", "--example-bath", "0.1", "0.2", "--rho", "1,0", "--times", "0.5"}).code ==
        cli::parse_error);
  CHECK(run_cli({"evolve", "--example-bath", "0.1", "0.2", "--bloch1", "2,0,0", "--bloch2", "0,0,1"}).code ==
        cli::parse_error);
  CHECK(run_cli({"evolve", "--example-bath", "0.1", "0.2", "--bloch1", "0,0,1", "--bloch2", "0,0,1", "--times",
                 "-1"})
            .code == cli::parse_error);

  const auto out_path = scratch("evolve.csv");
  CHECK(run_cli({"evolve", zero, "--bloch1", "0,0,1", "--bloch2", "0,0,1", "--output", out_path.string()}).code ==
        cli::ok);
  std::ifstream file(out_path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(csv_rows(content.str()).size() == 12);
}

TEST_CASE("scan writes CSV and SVG") {
  const auto csv_path = scratch("scan.csv");
  const auto svg_path = scratch("scan.svg");
  fs::remove(csv_path);
  fs::remove(svg_path);
  const auto res = run_cli({"scan", "--resolution", "5", "--budget", "100", "--output", csv_path.string()});
  REQUIRE(res.code == cli::ok);
  CHECK(fs::exists(csv_path));
  CHECK(fs::exists(svg_path));
  std::ifstream in(csv_path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(csv_rows(content.str()).size() == 26);

  const auto again = scratch("scan2.csv");
  REQUIRE(run_cli({"scan", "--resolution", "5", "--budget", "100", "--output", again.string()}).code == cli::ok);
  std::ifstream in2(again);
  std::stringstream content2;
  content2 << in2.rdbuf();
  CHECK(content.str() == content2.str());
}

TEST_CASE("fluorescence reports") {
  const auto complex_a = write_file("fl_complex.cfg", "[kossakowski.A.re]\n1 0 0\n0 1 0\n0 0 0\n"
                                                      "[kossakowski.A.im]\n0 -0.5 0\n0.5 0 0\n0 0 0\n");
  const auto found = run_cli({"fluorescence", complex_a});
  CHECK(found.code == cli::ok);
  CHECK(found.out.find("creation frame found") != std::string::npos);

  const auto real_a = write_file("fl_real.cfg", "[kossakowski.A.re]\n1 0 0\n0 1 0\n0 0 0\n");
  const auto none = run_cli({"fluorescence", real_a});
  CHECK(none.code == cli::ok);
  CHECK(none.out.find("no creation; rho~ evolves completely positively") != std::string::npos);

  const auto skew = write_file("fl_skew.cfg", "[kossakowski.A.re]\n1 1 0\n0 1 0\n0 0 0\n");
  CHECK(run_cli({"fluorescence", skew}).code == cli::parse_error);
}
