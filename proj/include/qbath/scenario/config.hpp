#pragma once

// Generator configuration files.
//
//   # comment
//   [hamiltonian]
//   h1 = 0 0 0.5
//   h2 = 0 0 0.5
//   [hamiltonian.h12]
//   0 0 0
//   0 0 0
//   0 0 0
//   [kossakowski.A.re]        (also .im, and B / C)
//   1 0 0
//   0 1 0
//   0 0 0
//
// Omitted sections are zero. Matrix sections hold exactly three rows of three numbers.

#include <istream>
#include <stdexcept>
#include <string>

#include "qbath/dynamics/generator.hpp"

namespace qbath {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ComplexBlock {
  RealMat3 re{};
  RealMat3 im{};

  ComplexMatrix matrix() const;
  static ComplexBlock from(const ComplexMatrix& m);
};

struct GeneratorConfig {
  HamiltonianSpec hamiltonian;
  ComplexBlock a;
  ComplexBlock b;
  ComplexBlock c;
};

GeneratorConfig parse_config(std::istream& in);
GeneratorConfig parse_config_string(const std::string& text);
/// Throws IoError if the file cannot be opened.
GeneratorConfig load_config(const std::string& path);

std::string render_config(const GeneratorConfig& config);

/// Kossakowski matrix of the config; CP-checked unless allow_non_cp.
KossakowskiMatrix to_kossakowski(const GeneratorConfig& config, bool allow_non_cp, double psd_tol);
LindbladGenerator to_generator(const GeneratorConfig& config, bool allow_non_cp, double psd_tol);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbath
