#include "maxdet/zmatrix.hpp"

#include "maxdet/errors.hpp"

namespace maxdet {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols) : ZMatrix(rows, cols, std::vector<Integer>(rows * cols)) {}

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("integer matrix must have positive dimensions");
  if (data_.size() != rows * cols) throw DimensionMismatch("integer matrix entry count mismatch");
}

ZMatrix::ZMatrix(const SignMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  data_.reserve(rows_ * cols_);
  for (std::int8_t v : m.entries()) data_.emplace_back(static_cast<long>(v));
}

ZMatrix ZMatrix::identity(std::size_t n) {
  return generate(n, n, [](std::size_t i, std::size_t j) { return Integer(i == j ? 1 : 0); });
}

ZMatrix ZMatrix::ones(std::size_t rows, std::size_t cols) {
  return ZMatrix(rows, cols, std::vector<Integer>(rows * cols, Integer(1)));
}

ZMatrix ZMatrix::generate(std::size_t rows, std::size_t cols,
                          const std::function<Integer(std::size_t, std::size_t)>& fn) {
  std::vector<Integer> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) data.push_back(fn(i, j));
  return ZMatrix(rows, cols, std::move(data));
}

ZMatrix ZMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Integer> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    for (long v : row) data.emplace_back(v);
  }
  return ZMatrix(r, c, std::move(data));
}

ZMatrix ZMatrix::transposed() const {
  return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

ZMatrix ZMatrix::scaled(const Integer& factor) const {
  std::vector<Integer> out(data_);
  for (auto& v : out) v *= factor;
  return ZMatrix(rows_, cols_, std::move(out));
}

ZMatrix ZMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                           std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("submatrix out of range");
  return generate(rows, cols, [&](std::size_t i, std::size_t j) { return (*this)(row0 + i, col0 + j); });
}

bool ZMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ZMatrix operator+(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  std::vector<Integer> out(a.data_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data_[i];
  return ZMatrix(a.rows_, a.cols_, std::move(out));
}

ZMatrix operator-(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  std::vector<Integer> out(a.data_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.data_[i];
  return ZMatrix(a.rows_, a.cols_, std::move(out));
}

ZMatrix operator-(const ZMatrix& a) {
  std::vector<Integer> out(a.data_);
  for (auto& v : out) v = -v;
  return ZMatrix(a.rows_, a.cols_, std::move(out));
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  std::vector<Integer> out(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Integer& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(out[i * b.cols_ + j].get_mpz_t(), x.get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  }
  return ZMatrix(a.rows_, b.cols_, std::move(out));
}

bool ZMatrix::operator==(const ZMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

}  // namespace maxdet
