#include "maxdet/linalg.hpp"

#include <utility>

#include "maxdet/errors.hpp"
#include "maxdet/kernels.hpp"

namespace maxdet {

ZMatrix gram(const SignMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t len = m.cols();
  std::vector<Integer> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int8_t* ri = m.row(i).data();
    out[i * n + i] = static_cast<long>(len);
    for (std::size_t j = i + 1; j < n; ++j) {
      const long dot = static_cast<long>(kernels::sign_dot(ri, m.row(j).data(), len));
      out[i * n + j] = dot;
      out[j * n + i] = dot;
    }
  }
  return ZMatrix(n, n, std::move(out));
}

ZMatrix gram(const ZMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Integer> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Integer sum = 0;
      for (std::size_t l = 0; l < m.cols(); ++l)
        mpz_addmul(sum.get_mpz_t(), m(i, l).get_mpz_t(), m(j, l).get_mpz_t());
      out[i * n + j] = sum;
      out[j * n + i] = sum;
    }
  }
  return ZMatrix(n, n, std::move(out));
}

Integer det_exact(const ZMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> w(a.entries());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return w[i * n + j]; };

  Integer prev = 1;
  Integer tmp;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
      negate = !negate;
    }
    const mpz_srcptr pivot = at(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_srcptr lead = at(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), at(i, j).get_mpz_t(), pivot);
        mpz_submul(tmp.get_mpz_t(), lead, at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

Integer det_exact(const SignMatrix& m) { return det_exact(ZMatrix(m)); }

SignMatrix tensor(const SignMatrix& a, const SignMatrix& b) {
  return SignMatrix::generate(a.rows() * b.rows(), a.cols() * b.cols(), [&](std::size_t i, std::size_t j) {
    return a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  });
}

ZMatrix tensor(const ZMatrix& a, const ZMatrix& b) {
  return ZMatrix::generate(a.rows() * b.rows(), a.cols() * b.cols(), [&](std::size_t i, std::size_t j) {
    return Integer(a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols()));
  });
}

namespace {

template <class M>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> grid_offsets(const BlockGrid<M>& grid) {
  if (grid.empty() || grid.front().empty()) throw DimensionMismatch("empty block grid");
  const std::size_t gr = grid.size();
  const std::size_t gc = grid.front().size();
  std::vector<std::size_t> row_off(gr + 1, 0);
  std::vector<std::size_t> col_off(gc + 1, 0);
  for (std::size_t bi = 0; bi < gr; ++bi) {
    if (grid[bi].size() != gc) throw DimensionMismatch("ragged block grid");
    row_off[bi + 1] = row_off[bi] + grid[bi][0].rows();
  }
  for (std::size_t bj = 0; bj < gc; ++bj) col_off[bj + 1] = col_off[bj] + grid[0][bj].cols();
  for (std::size_t bi = 0; bi < gr; ++bi) {
    for (std::size_t bj = 0; bj < gc; ++bj) {
      if (grid[bi][bj].rows() != row_off[bi + 1] - row_off[bi] ||
          grid[bi][bj].cols() != col_off[bj + 1] - col_off[bj]) {
        throw DimensionMismatch("block (" + std::to_string(bi) + ", " + std::to_string(bj) +
                                ") does not fit its grid row/column");
      }
    }
  }
  return {row_off, col_off};
}

template <class M, class Entry, class Make>
M assemble(const BlockGrid<M>& grid, Make make) {
  auto [row_off, col_off] = grid_offsets(grid);
  const std::size_t rows = row_off.back();
  const std::size_t cols = col_off.back();
  std::vector<Entry> data(rows * cols);
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    for (std::size_t bj = 0; bj < grid[bi].size(); ++bj) {
      const M& block = grid[bi][bj];
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          data[(row_off[bi] + i) * cols + col_off[bj] + j] = block(i, j);
    }
  }
  return make(rows, cols, std::move(data));
}

}  // namespace

SignMatrix block_assemble(const BlockGrid<SignMatrix>& grid) {
  return assemble<SignMatrix, std::int8_t>(grid, [](std::size_t r, std::size_t c, std::vector<std::int8_t> d) {
    return SignMatrix(r, c, std::move(d));
  });
}

ZMatrix block_assemble(const BlockGrid<ZMatrix>& grid) {
  return assemble<ZMatrix, Integer>(grid, [](std::size_t r, std::size_t c, std::vector<Integer> d) {
    return ZMatrix(r, c, std::move(d));
  });
}

Integer excess(const SignMatrix& m) {
  long sum = 0;
  for (std::int8_t v : m.entries()) sum += v;
  return sum;
}

std::vector<long> row_sums(const SignMatrix& m) {
  std::vector<long> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::int8_t v : m.row(i)) out[i] += v;
  return out;
}

std::vector<long> col_sums(const SignMatrix& m) {
  std::vector<long> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
  return out;
}

Rational block_jj_det(const Integer& a, const Rational& b, const Rational& c, const Rational& d,
                      std::size_t k) {
  if (k == 0) throw InvalidArgument("block_jj_det: block order k must be positive");
  const Rational kk(static_cast<long>(k));
  Rational head = Rational(a * a) + Rational(a) * kk * (b + d) + kk * kk * (b * d - c * c);
  head *= Rational(ipow(a, 2 * k - 2));
  head.canonicalize();
  return head;
}

}  // namespace maxdet
