#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace maxdet {

// Dense row-major matrix with entries in {+1, -1}.
class SignMatrix {
 public:
  SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries);

  static SignMatrix filled(std::size_t rows, std::size_t cols, int value);
  static SignMatrix generate(std::size_t rows, std::size_t cols,
                             const std::function<int(std::size_t, std::size_t)>& fn);
  static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  // Rows of '+' and '-' characters.
  static SignMatrix from_strings(const std::vector<std::string_view>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  int operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  std::span<const std::int8_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const std::int8_t> entries() const noexcept { return data_; }

  SignMatrix transposed() const;
  SignMatrix negated() const;
  SignMatrix with_flipped(std::size_t i, std::size_t j) const;
  SignMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                       std::size_t cols) const;

  bool operator==(const SignMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int8_t> data_;
};

}  // namespace maxdet
