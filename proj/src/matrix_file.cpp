#include "maxdet/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Parses a positive decimal field starting at `pos`; advances past it.
std::size_t parse_count(std::string_view line, std::size_t& pos, std::size_t line_no) {
  const std::size_t begin = pos;
  while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
  if (pos == begin) throw ParseError(line_no, begin + 1, "expected a decimal count");
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(line.data() + begin, line.data() + pos, value);
  if (ec != std::errc() || value == 0) throw ParseError(line_no, begin + 1, "count must be a positive integer");
  return value;
}

}  // namespace

SignMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected header \"pm1 <rows> <cols>\"");
  const std::string_view header = lines[0];
  if (header.substr(0, 4) != "pm1 ") throw ParseError(1, 1, "header must start with \"pm1 \"");
  std::size_t pos = 4;
  const std::size_t rows = parse_count(header, pos, 1);
  if (pos >= header.size() || header[pos] != ' ') throw ParseError(1, pos + 1, "expected a single space");
  ++pos;
  const std::size_t cols = parse_count(header, pos, 1);
  if (pos != header.size()) throw ParseError(1, pos + 1, "unexpected text after the header");
  check_size_guard(std::max(rows, cols), "matrix file");

  std::vector<std::int8_t> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t line_no = i + 2;
    if (line_no > lines.size()) throw ParseError(line_no, 1, "expected " + std::to_string(rows) + " rows, file ends");
    const std::string_view line = lines[line_no - 1];
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j >= cols) throw ParseError(line_no, j + 1, "row longer than " + std::to_string(cols) + " entries");
      if (line[j] == '+') data.push_back(1);
      else if (line[j] == '-') data.push_back(-1);
      else throw ParseError(line_no, j + 1, std::string("unexpected character '") + line[j] + "'");
    }
    if (line.size() < cols) {
      throw ParseError(line_no, line.size() + 1,
                       "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(cols));
    }
  }
  for (std::size_t l = rows + 1; l < lines.size(); ++l) {
    if (lines[l].empty() || lines[l][0] != '#') throw ParseError(l + 1, 1, "only '#' comment lines may follow the rows");
  }
  return SignMatrix(rows, cols, std::move(data));
}

std::string serialize_matrix(const SignMatrix& m, const std::vector<std::string>& comments) {
  std::string out = "pm1 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out.reserve(out.size() + m.rows() * (m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::int8_t v : m.row(i)) out.push_back(v > 0 ? '+' : '-');
    out.push_back('\n');
  }
  for (const auto& c : comments) {
    std::istringstream lines(c);
    for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  }
  return out;
}

SignMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const SignMatrix& m, const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << serialize_matrix(m, comments);
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

}  // namespace maxdet
