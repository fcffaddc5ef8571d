#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "maxdet/numeric.hpp"
#include "maxdet/sign_matrix.hpp"

namespace maxdet {

// Dense row-major matrix of arbitrary-precision integers.
class ZMatrix {
 public:
  ZMatrix(std::size_t rows, std::size_t cols);  // zero matrix
  ZMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  explicit ZMatrix(const SignMatrix& m);

  static ZMatrix identity(std::size_t n);
  static ZMatrix ones(std::size_t rows, std::size_t cols);
  static ZMatrix generate(std::size_t rows, std::size_t cols,
                          const std::function<Integer(std::size_t, std::size_t)>& fn);
  static ZMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  const std::vector<Integer>& entries() const noexcept { return data_; }

  ZMatrix transposed() const;
  ZMatrix scaled(const Integer& factor) const;
  ZMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  bool is_symmetric() const;

  friend ZMatrix operator+(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator-(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator-(const ZMatrix& a);
  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  bool operator==(const ZMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

}  // namespace maxdet
