#include <doctest.h>

#include <random>

#include "maxdet/constructions.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/search.hpp"
#include "maxdet/verification.hpp"
#include "oracles.hpp"

using namespace maxdet;

namespace {

// Random row signs and row order, keeping the Gram class.
SignMatrix scramble(const SignMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(m.rows());
  for (auto& s : sign) s = (rng() & 1) ? -1 : 1;
  return SignMatrix::generate(m.rows(), m.cols(),
                              [&](std::size_t i, std::size_t j) { return sign[i] * m(perm[i], j); });
}

void check_trace(const SignMatrix& m, GramTag expected) {
  const GramClass cls = classify_gram(m);
  REQUIRE(cls.tag == expected);
  const auto canon = canonical_gram(cls, m.rows());
  REQUIRE(canon.has_value());
  CHECK(apply_trace(gram(m), cls) == *canon);
}

}  // namespace

TEST_CASE("normalization") {
  const SignMatrix m = SignMatrix::from_strings({"+--", "-++", "+++"});
  const NormalizedRows nr = normalize_rows(m);
  for (std::size_t i = 0; i < 3; ++i) {
    int neg = 0;
    for (std::size_t j = 0; j < 3; ++j) neg += nr.matrix(i, j) < 0;
    CHECK(neg % 2 == 0);
  }
  CHECK(nr.signs == std::vector<std::int8_t>{1, -1, 1});
  CHECK_THROWS_AS(normalize_rows(SignMatrix::filled(2, 2, 1)), InvalidArgument);
}

TEST_CASE("hadamard detection") {
  CHECK(is_hadamard(sylvester(3).matrix));
  CHECK(is_hadamard(paley_I(11).matrix));
  CHECK_FALSE(is_hadamard(sylvester(3).matrix.with_flipped(2, 5)));
}

TEST_CASE("gram classes with traces") {
  check_trace(scramble(paley_I(7).matrix, 1), GramTag::HadamardDiagonal);
  check_trace(scramble(brouwer_whiteman(3).matrix, 2), GramTag::BarbaOptimal);
  check_trace(scramble(exhaustive_maxdet(6).witnesses.front(), 3), GramTag::TwoMod4Optimal);
  // 96 < 160 at order 6: the border is not optimal.
  CHECK(classify_gram(cohn_border(5).matrix).tag == GramTag::Unclassified);
  CHECK(classify_gram(osds(3).matrix).tag != GramTag::HadamardDiagonal);
}

TEST_CASE("ehlich block classification") {
  const Partition p({2, 2, 1, 1, 1});
  const ZMatrix g = ehlich_block_matrix(7, p);
  const GramClass cls = classify_gram_matrix(g);
  CHECK(cls.tag == GramTag::EhlichBlock);
  REQUIRE(cls.partition.has_value());
  CHECK(cls.partition->parts() == p.parts());
  CHECK(apply_trace(g, cls) == *canonical_gram(cls, 7));

  // 3 links 0-1 and 1-2 but 0-2 is -1: not a block form.
  ZMatrix bad = ZMatrix::generate(7, 7, [](std::size_t i, std::size_t j) {
    if (i == j) return Integer(7);
    const bool link = (i + j == 1) || (i + j == 3 && (i == 1 || j == 1));
    return Integer(link ? 3 : -1);
  });
  const GramClass bc = classify_gram_matrix(bad);
  CHECK(bc.tag == GramTag::Unclassified);
  REQUIRE(bc.violating_triple.has_value());
}

TEST_CASE("certificate check reports the first bad entry") {
  const Construction c = paley_I(7);
  CHECK_NOTHROW(check_certificate(c.matrix, c.certificate));
  const SignMatrix bad = c.matrix.with_flipped(3, 4);
  try {
    check_certificate(bad, c.certificate);
    FAIL("no mismatch raised");
  } catch (const VerificationMismatch& e) {
    CHECK(e.has_position());
    CHECK(e.row() <= 3);
  }
}

TEST_CASE("expected certificates rebuild from the matrix") {
  CHECK_NOTHROW(verify(brouwer_whiteman(3).matrix, Family::BrouwerWhiteman));
  CHECK_NOTHROW(verify(osds(7).matrix, Family::OSDS));
  CHECK_NOTHROW(verify(doubling(brouwer_whiteman(3).matrix).matrix, Family::Doubling));
  CHECK_THROWS_AS(verify(brouwer_whiteman(3).matrix, Family::OSDS), VerificationMismatch);
  CHECK_THROWS_AS(verify(brouwer_whiteman(3).matrix.with_flipped(0, 0), Family::BrouwerWhiteman),
                  VerificationMismatch);
}

TEST_CASE("report fields") {
  const VerificationReport r = verify(brouwer_whiteman(3).matrix);
  CHECK(r.order == 25);
  CHECK(r.det_sq == 49 * ipow(24, 24));
  CHECK(r.det * r.det == r.det_sq);
  CHECK(r.ratio == "1.0000");
  CHECK(r.gram_class.tag == GramTag::BarbaOptimal);
  CHECK(r.row_sums == std::vector<long>(25, 7));
  CHECK(r.excess == 175);
  CHECK(r.feasibility.not_obstructed());
}
