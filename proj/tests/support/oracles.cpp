#include "oracles.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace oracle {

Integer cofactor_det(const IntRows& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n > 9) throw std::invalid_argument("cofactor_det is exponential; order <= 9");
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    IntRows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * cofactor_det(minor);
    if (c % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

IntRows to_rows(const maxdet::SignMatrix& m) {
  IntRows out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntRows to_rows(const maxdet::ZMatrix& m) {
  IntRows out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

IntRows naive_gram(const maxdet::SignMatrix& m) {
  IntRows g(m.rows(), std::vector<long>(m.rows(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      for (std::size_t c = 0; c < m.cols(); ++c) g[i][j] += m(i, c) * m(j, c);
  return g;
}

namespace {

// Gaussian elimination over doubles, rounded; exact for the tiny orders used.
std::int64_t float_det(std::vector<double> a, int n) {
  double det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    if (a[p * n + k] == 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return static_cast<std::int64_t>(det < 0 ? det - 0.5 : det + 0.5);
}

}  // namespace

std::int64_t brute_force_maxdet(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("brute_force_maxdet supports n <= 6");
  const int free_bits = (n - 1) * (n - 1);
  std::int64_t best = 0;
  std::vector<double> a(static_cast<std::size_t>(n * n));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == 0 || j == 0) a[i * n + j] = 1;
        else a[i * n + j] = (code >> bit++) & 1 ? -1 : 1;
      }
    best = std::max(best, std::abs(float_det(a, n)));
  }
  return best;
}

int legendre_by_squares(long x, long p) {
  const long r = ((x % p) + p) % p;
  if (r == 0) return 0;
  std::set<long> squares;
  for (long y = 1; y < p; ++y) squares.insert(y * y % p);
  return squares.count(r) ? 1 : -1;
}

long naive_paf(const std::vector<std::int8_t>& x, std::size_t j) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * x[(i + j) % x.size()];
  return s;
}

maxdet::SignMatrix random_sign_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::int8_t> data(rows * cols);
  for (auto& v : data) v = coin(rng) ? 1 : -1;
  return maxdet::SignMatrix(rows, cols, std::move(data));
}

}  // namespace oracle
