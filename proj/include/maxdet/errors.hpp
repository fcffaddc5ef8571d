#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxdet {

// Bad parameters: wrong residue class, composite modulus, failed precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class SizeGuardExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Malformed matrix file. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A matrix disagrees with the certificate it was expected to satisfy.
class VerificationMismatch : public std::runtime_error {
 public:
  VerificationMismatch(std::size_t row, std::size_t col, const std::string& what);
  explicit VerificationMismatch(const std::string& what);
  bool has_position() const noexcept { return has_position_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_ = 0;
  std::size_t col_ = 0;
  bool has_position_ = false;
};

// A construction failed its own certificate. Always a bug, never bad input.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest matrix order a construction may materialize. Defaults to 4096,
// overridden by MAXDET_SIZE_GUARD or set_size_guard.
std::size_t size_guard();
void set_size_guard(std::size_t limit);
void check_size_guard(std::size_t order, std::string_view what);

}  // namespace maxdet
