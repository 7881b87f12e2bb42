#include "qbath/scenario/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace qbath {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

double parse_number(const Token& tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (!tok.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(line, tok.column, "expected a number, got '" + tok.text + "'");
  return value;
}

std::string strip_comment(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

RealMat3* matrix_slot(GeneratorConfig& cfg, const std::string& section) {
  static const std::map<std::string, RealMat3 ComplexBlock::*> parts{{"re", &ComplexBlock::re}, {"im", &ComplexBlock::im}};
  if (section == "hamiltonian.h12") return &cfg.hamiltonian.h12;
  const std::string prefix = "kossakowski.";
  if (section.rfind(prefix, 0) != 0 || section.size() != prefix.size() + 4 || section[prefix.size() + 1] != '.')
    return nullptr;
  const char which = section[prefix.size()];
  const auto part = parts.find(section.substr(prefix.size() + 2));
  if (part == parts.end()) return nullptr;
  ComplexBlock* block = which == 'A' ? &cfg.a : which == 'B' ? &cfg.b : which == 'C' ? &cfg.c : nullptr;
  return block ? &(block->*(part->second)) : nullptr;
}

void write_matrix(std::ostringstream& out, const std::string& section, const RealMat3& m) {
  out << '[' << section << "]\n";
  for (const auto& row : m) {
    char buf[3][32];
    for (std::size_t j = 0; j < 3; ++j) {
      const auto res = std::to_chars(buf[j], buf[j] + sizeof(buf[j]) - 1, row[j]);
      *res.ptr = '\0';
    }
    out << buf[0] << ' ' << buf[1] << ' ' << buf[2] << '\n';
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ComplexMatrix ComplexBlock::matrix() const {
  ComplexMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = cplx(re[i][j], im[i][j]);
  return m;
}

ComplexBlock ComplexBlock::from(const ComplexMatrix& m) {
  if (m.dim() != 3) throw UsageError("ComplexBlock needs a 3x3 matrix");
  ComplexBlock b;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      b.re[i][j] = m(i, j).real();
      b.im[i][j] = m(i, j).imag();
    }
  return b;
}

GeneratorConfig parse_config(std::istream& in) {
  GeneratorConfig cfg;
  std::string section;
  std::size_t section_line = 0;
  RealMat3* matrix = nullptr;
  std::size_t rows_read = 0;
  std::set<std::string> seen_sections;
  std::set<std::string> seen_keys;

  const auto close_section = [&](std::size_t line_no) {
    if (matrix && rows_read != 3)
      throw ParseError(rows_read == 0 ? section_line : line_no, 1,
                       "section [" + section + "] needs 3 rows, found " + std::to_string(rows_read));
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    const std::size_t first = line.find_first_not_of(" \t");

    if (line[first] == '[') {
      close_section(line_no);
      const std::size_t close = line.find(']', first);
      if (close == std::string::npos) throw ParseError(line_no, first + 1, "unterminated section header");
      if (!blank(line.substr(close + 1))) throw ParseError(line_no, close + 2, "trailing text after section header");
      section = line.substr(first + 1, close - first - 1);
      section_line = line_no;
      if (!seen_sections.insert(section).second) throw ParseError(line_no, first + 1, "duplicate section [" + section + "]");
      rows_read = 0;
      if (section == "hamiltonian") {
        matrix = nullptr;
      } else {
        matrix = matrix_slot(cfg, section);
        if (!matrix) throw ParseError(line_no, first + 2, "unknown section [" + section + "]");
      }
      continue;
    }

    if (section.empty()) throw ParseError(line_no, first + 1, "content before any section header");

    if (!matrix) {
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, first + 1, "expected 'key = values'");
      const auto key_tokens = split_tokens(line.substr(0, eq), 0);
      if (key_tokens.size() != 1) throw ParseError(line_no, first + 1, "malformed key");
      const std::string key = key_tokens[0].text;
      Vec3* target = key == "h1" ? &cfg.hamiltonian.h1 : key == "h2" ? &cfg.hamiltonian.h2 : nullptr;
      if (!target) throw ParseError(line_no, key_tokens[0].column, "unknown key '" + key + "' in [hamiltonian]");
      if (!seen_keys.insert(key).second) throw ParseError(line_no, key_tokens[0].column, "duplicate key '" + key + "'");
      const auto values = split_tokens(line, eq + 1);
      if (values.size() != 3)
        throw ParseError(line_no, values.size() > 3 ? values[3].column : line.size() + 1,
                         "'" + key + "' needs exactly 3 numbers");
      for (std::size_t i = 0; i < 3; ++i) (*target)[i] = parse_number(values[i], line_no);
      continue;
    }

    if (rows_read == 3) throw ParseError(line_no, first + 1, "section [" + section + "] has more than 3 rows");
    const auto values = split_tokens(line, 0);
    if (values.size() != 3)
      throw ParseError(line_no, values.size() > 3 ? values[3].column : line.size() + 1,
                       "matrix row needs exactly 3 numbers");
    for (std::size_t j = 0; j < 3; ++j) (*matrix)[rows_read][j] = parse_number(values[j], line_no);
    ++rows_read;
  }
  close_section(line_no + 1);
  return cfg;
}

GeneratorConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

GeneratorConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_config(in);
}

std::string render_config(const GeneratorConfig& config) {
  std::ostringstream out;
  const auto vec_line = [&](const char* key, const Vec3& v) {
    char buf[3][32];
    for (std::size_t j = 0; j < 3; ++j) *std::to_chars(buf[j], buf[j] + 31, v[j]).ptr = '\0';
    out << key << " = " << buf[0] << ' ' << buf[1] << ' ' << buf[2] << '\n';
  };
  out << "[hamiltonian]\n";
  vec_line("h1", config.hamiltonian.h1);
  vec_line("h2", config.hamiltonian.h2);
  write_matrix(out, "hamiltonian.h12", config.hamiltonian.h12);
  const std::pair<const char*, const ComplexBlock*> blocks[] = {{"A", &config.a}, {"B", &config.b}, {"C", &config.c}};
  for (const auto& [name, block] : blocks) {
    write_matrix(out, std::string("kossakowski.") + name + ".re", block->re);
    write_matrix(out, std::string("kossakowski.") + name + ".im", block->im);
  }
  return out.str();
}

KossakowskiMatrix to_kossakowski(const GeneratorConfig& config, bool allow_non_cp, double psd_tol) {
  const ComplexMatrix a = config.a.matrix();
  const ComplexMatrix b = config.b.matrix();
  const ComplexMatrix c = config.c.matrix();
  return allow_non_cp ? KossakowskiMatrix::unchecked(a, b, c) : KossakowskiMatrix::checked(a, b, c, psd_tol);
}

LindbladGenerator to_generator(const GeneratorConfig& config, bool allow_non_cp, double psd_tol) {
  return LindbladGenerator(config.hamiltonian, to_kossakowski(config, allow_non_cp, psd_tol));
}

}  // namespace qbath
