#include <doctest.h>

#include <random>

#include "maxdet/constructions.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/matrix_file.hpp"
#include "maxdet/verification.hpp"
#include "oracles.hpp"

using namespace maxdet;

namespace {

constexpr int kCases = 1000;

}  // namespace

TEST_CASE("gram matches the naive product") {
  std::mt19937_64 rng(101);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t r = 1 + rng() % 9, n = 1 + rng() % 12;
    const SignMatrix m = oracle::random_sign_matrix(rng, r, n);
    CHECK(oracle::to_rows(gram(m)) == oracle::naive_gram(m));
  }
}

TEST_CASE("det_exact matches cofactor expansion") {
  std::mt19937_64 rng(102);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 1 + rng() % 7;
    const SignMatrix m = oracle::random_sign_matrix(rng, n, n);
    CHECK(det_exact(m) == oracle::cofactor_det(oracle::to_rows(m)));
  }
}

TEST_CASE("det invariances") {
  std::mt19937_64 rng(103);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 1 + rng() % 10;
    const SignMatrix m = oracle::random_sign_matrix(rng, n, n);
    const Integer d = det_exact(m);
    CHECK(det_exact(m.transposed()) == d);
    const std::size_t i = rng() % n;
    const SignMatrix neg = SignMatrix::generate(n, n, [&](std::size_t a, std::size_t b) {
      return a == i ? -m(a, b) : m(a, b);
    });
    CHECK(det_exact(neg) == -d);
    CHECK(det_exact(gram(m)) == d * d);
  }
}

TEST_CASE("tensor determinant is multiplicative") {
  std::mt19937_64 rng(104);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    const SignMatrix x = oracle::random_sign_matrix(rng, a, a);
    const SignMatrix y = oracle::random_sign_matrix(rng, b, b);
    CHECK(det_exact(tensor(x, y)) == ipow(det_exact(x), b) * ipow(det_exact(y), a));
  }
}

TEST_CASE("classification traces land on the canonical form") {
  std::mt19937_64 rng(105);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 1 + rng() % 9;
    const SignMatrix m = oracle::random_sign_matrix(rng, n, n);
    const GramClass cls = classify_gram(m);
    if (cls.tag == GramTag::Unclassified) continue;
    const auto canon = canonical_gram(cls, n);
    REQUIRE(canon.has_value());
    CHECK(apply_trace(gram(m), cls) == *canon);
  }
}

TEST_CASE("matrix files round-trip") {
  std::mt19937_64 rng(106);
  for (int c = 0; c < kCases; ++c) {
    const SignMatrix m = oracle::random_sign_matrix(rng, 1 + rng() % 20, 1 + rng() % 20);
    CHECK(parse_matrix(serialize_matrix(m, {"seeded"})) == m);
  }
}

TEST_CASE("serialized constructions verify the same as in memory") {
  const std::vector<Construction> built = {
      sylvester(3),      paley_I(11),          cohn_border(5), excess_border(sylvester(2).matrix),
      bw_ortho_M(3),     bw_N(3),              brouwer_whiteman(3), doubling(brouwer_whiteman(3).matrix),
      osds(3),           osds(7),
  };
  for (const auto& c : built) {
    const auto family = c.certificate.family;
    INFO(family_name(family));
    const SignMatrix back = parse_matrix(serialize_matrix(c.matrix));
    CHECK(back == c.matrix);
    if (!c.matrix.is_square()) continue;
    const VerificationReport a = verify(c.matrix, family);
    const VerificationReport b = verify(back, family);
    CHECK(a.det == b.det);
    CHECK(a.ratio == b.ratio);
    CHECK(a.gram_class.tag == b.gram_class.tag);
    CHECK(a.parameters == b.parameters);
    CHECK(a.row_sums == b.row_sums);
  }
}
