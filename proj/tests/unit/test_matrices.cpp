#include <doctest.h>

#include "maxdet/errors.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"
#include "oracles.hpp"

#include <random>

using namespace maxdet;

TEST_CASE("sign matrix basics") {
  const SignMatrix h = SignMatrix::from_strings({"++", "+-"});
  CHECK(h.rows() == 2);
  CHECK(h(1, 1) == -1);
  CHECK(h.transposed() == h);
  CHECK(h.negated()(0, 0) == -1);
  CHECK(h.with_flipped(0, 1)(0, 1) == -1);
  CHECK(h.submatrix(1, 0, 1, 2) == SignMatrix::from_strings({"+-"}));
  CHECK_THROWS_AS(SignMatrix(2, 2, {1, 0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(SignMatrix::from_strings({"+x"}), InvalidArgument);
}

TEST_CASE("gram of small sign matrices") {
  CHECK(gram(SignMatrix::filled(1, 1, 1)) == ZMatrix::from_rows({{1}}));
  CHECK(gram(SignMatrix::from_strings({"++", "+-"})) == ZMatrix::from_rows({{2, 0}, {0, 2}}));
}

TEST_CASE("gram matches the naive product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SignMatrix m = oracle::random_sign_matrix(rng, 1 + trial % 9, 1 + (trial * 7) % 40);
    CHECK(oracle::to_rows(gram(m)) == oracle::naive_gram(m));
  }
}

TEST_CASE("det_exact") {
  CHECK(det_exact(ZMatrix::identity(5)) == 1);
  CHECK(det_exact(ZMatrix::from_rows({{7, -1}, {-1, 7}})) == 48);
  CHECK(det_exact(ZMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(ZMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(ZMatrix(0, 0), InvalidArgument);
  CHECK_THROWS_AS(det_exact(ZMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    oracle::IntRows rows(n, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& v : r) v = trial % 5 == 0 ? entry(rng) % 2 : entry(rng);  // some singular cases
    const ZMatrix z = ZMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return Integer(rows[i][j]); });
    CHECK(det_exact(z) == oracle::cofactor_det(rows));
  }
}

TEST_CASE("tensor products") {
  CHECK(tensor(ZMatrix::identity(2), ZMatrix::identity(3)) == ZMatrix::identity(6));
  const SignMatrix h2 = SignMatrix::from_strings({"++", "+-"});
  const SignMatrix h4 = tensor(h2, h2);
  CHECK(h4 == SignMatrix::from_strings({"++++", "+-+-", "++--", "+--+"}));
}

TEST_CASE("block assembly") {
  const SignMatrix w = SignMatrix::filled(1, 1, 1);
  CHECK(block_assemble(BlockGrid<SignMatrix>{{w}}) == w);
  const SignMatrix h = block_assemble(BlockGrid<SignMatrix>{{w, w}, {w, w.negated()}});
  CHECK(h == SignMatrix::from_strings({"++", "+-"}));
  CHECK_THROWS_AS(block_assemble(BlockGrid<SignMatrix>{{w, w}, {SignMatrix::filled(2, 1, 1), w}}), DimensionMismatch);
}

TEST_CASE("excess and row sums") {
  CHECK(excess(SignMatrix::filled(3, 3, 1)) == 9);
  const SignMatrix j4m2i = SignMatrix::generate(4, 4, [](std::size_t i, std::size_t j) { return i == j ? -1 : 1; });
  CHECK(excess(j4m2i) == 8);
  CHECK(row_sums(SignMatrix::from_strings({"+-", "-+"})) == std::vector<long>{0, 0});
  CHECK(col_sums(SignMatrix::from_strings({"++", "+-"})) == std::vector<long>{2, 0});
}

TEST_CASE("block_jj_det closed form") {
  CHECK(block_jj_det(3, 0, 0, 0, 2) == ipow(3, 4));
  // b = c = d: the whole matrix is aI + bJ of order 2k.
  CHECK(block_jj_det(3, 2, 2, 2, 2) == Rational((3 + 2 * 2 * 2) * ipow(3, 3)));
  CHECK(block_jj_det(1, 1, 2, 3, 2) == 5);
  const ZMatrix explicit4 = ZMatrix::from_rows({{2, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 4, 3}, {2, 2, 3, 4}});
  CHECK(det_exact(explicit4) == 5);
}
