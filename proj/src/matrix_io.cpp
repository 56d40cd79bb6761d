#include "ttp/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ttp/errors.hpp"

namespace ttp {

ExactMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Rational> row;
    std::string token;
    while (fields >> token) {
      try {
        row.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix text has no rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw ParseError("matrix is not square: row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
  }
  return ExactMatrix(rows);
}

ExactMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read matrix file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const ExactMatrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.entries().size());
  std::size_t width = 0;
  for (const auto& v : m.entries()) {
    cells.push_back(to_string(v));
    width = std::max(width, cells.back().size());
  }
  std::string out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = cells[i * n + j];
      if (j) out += ' ';
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ttp
