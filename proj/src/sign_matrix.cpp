#include "maxdet/sign_matrix.hpp"

#include <string>
#include <string_view>

#include "maxdet/errors.hpp"

namespace maxdet {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("sign matrix must have positive dimensions");
  if (data_.size() != rows * cols) throw DimensionMismatch("sign matrix entry count mismatch");
  for (std::int8_t v : data_) {
    if (v != 1 && v != -1) throw InvalidArgument("sign matrix entries must be +1 or -1");
  }
}

SignMatrix SignMatrix::filled(std::size_t rows, std::size_t cols, int value) {
  return SignMatrix(rows, cols, std::vector<std::int8_t>(rows * cols, static_cast<std::int8_t>(value)));
}

SignMatrix SignMatrix::generate(std::size_t rows, std::size_t cols,
                                const std::function<int(std::size_t, std::size_t)>& fn) {
  std::vector<std::int8_t> data(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) data[i * cols + j] = static_cast<std::int8_t>(fn(i, j));
  return SignMatrix(rows, cols, std::move(data));
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<std::int8_t> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    for (int v : row) data.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(r, c, std::move(data));
}

SignMatrix SignMatrix::from_strings(const std::vector<std::string_view>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<std::int8_t> data;
  data.reserve(r * c);
  for (std::string_view row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    for (char ch : row) {
      if (ch == '+') data.push_back(1);
      else if (ch == '-') data.push_back(-1);
      else throw InvalidArgument(std::string("unexpected character '") + ch + "' in sign row");
    }
  }
  return SignMatrix(r, c, std::move(data));
}

SignMatrix SignMatrix::transposed() const {
  std::vector<std::int8_t> out(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = data_[i * cols_ + j];
  return SignMatrix(cols_, rows_, std::move(out));
}

SignMatrix SignMatrix::negated() const {
  std::vector<std::int8_t> out(data_);
  for (auto& v : out) v = static_cast<std::int8_t>(-v);
  return SignMatrix(rows_, cols_, std::move(out));
}

SignMatrix SignMatrix::with_flipped(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InvalidArgument("flip position out of range");
  std::vector<std::int8_t> out(data_);
  out[i * cols_ + j] = static_cast<std::int8_t>(-out[i * cols_ + j]);
  return SignMatrix(rows_, cols_, std::move(out));
}

SignMatrix SignMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                                 std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("submatrix out of range");
  return generate(rows, cols, [&](std::size_t i, std::size_t j) { return (*this)(row0 + i, col0 + j); });
}

}  // namespace maxdet
