#include <doctest.h>

#include <filesystem>

#include "maxdet/errors.hpp"
#include "maxdet/matrix_file.hpp"

using namespace maxdet;

namespace {

void check_parse_error(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_matrix(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("parse and serialize") {
  const SignMatrix m = parse_matrix("pm1 2 3\n+-+\n--+\n# note\n");
  CHECK(m == SignMatrix::from_strings({"+-+", "--+"}));
  CHECK(serialize_matrix(m) == "pm1 2 3\n+-+\n--+\n");
  CHECK(serialize_matrix(m, {"order 2"}) == "pm1 2 3\n+-+\n--+\n# order 2\n");
  CHECK(parse_matrix(serialize_matrix(m, {"a", "b"})) == m);
  CHECK(parse_matrix("pm1 1 1\n-") == SignMatrix::filled(1, 1, -1));
}

TEST_CASE("parse errors carry positions") {
  check_parse_error("", 1, 1);
  check_parse_error("pm2 1 1\n+\n", 1, 1);
  check_parse_error("pm1 2  2\n++\n++\n", 1, 7);
  check_parse_error("pm1 0 2\n", 1, 5);
  check_parse_error("pm1 2 2 \n++\n++\n", 1, 8);
  check_parse_error("pm1 2 2\n++\n+x\n", 3, 2);
  check_parse_error("pm1 2 2\n++\n+\n", 3, 2);
  check_parse_error("pm1 2 2\n++\n+++\n", 3, 3);
  check_parse_error("pm1 2 2\n++\n", 3, 1);
  check_parse_error("pm1 1 2\n++\n\n", 3, 1);
  check_parse_error("pm1 1 2\n++\n++\n", 3, 1);
}

TEST_CASE("size guard on the header") {
  const std::size_t saved = size_guard();
  set_size_guard(4);
  CHECK_THROWS_AS(parse_matrix("pm1 5 1\n+\n+\n+\n+\n+\n"), SizeGuardExceeded);
  set_size_guard(saved);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "maxdet_unit_matrix.pm1";
  const SignMatrix m = SignMatrix::from_strings({"++", "+-"});
  write_matrix_file(path, m, {"h2"});
  CHECK(read_matrix_file(path) == m);
  std::filesystem::remove(path);
  CHECK_THROWS(read_matrix_file(path));
}
