#include <doctest.h>

#include "maxdet/circulant.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/finite_field.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/verification.hpp"
#include "oracles.hpp"

using namespace maxdet;

namespace {

ZMatrix scalar(std::size_t n, long d) { return ZMatrix::identity(n).scaled(d); }

ZMatrix aI_plus_bJ(std::size_t n, long a, long b) {
  return ZMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return Integer((i == j ? a : 0) + b); });
}

// Every predicted Gram entry agrees with the product.
void check_predicted_entries(const Construction& c) {
  const ZMatrix g = gram(c.matrix);
  REQUIRE(c.certificate.predicted_gram_entry);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) REQUIRE(g(i, j) == c.certificate.predicted_gram_entry(i, j));
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("paley2").has_value());
}

TEST_CASE("sylvester") {
  CHECK(sylvester(0).matrix == SignMatrix::filled(1, 1, 1));
  CHECK(sylvester(1).matrix == SignMatrix::from_strings({"++", "+-"}));
  const SignMatrix h2 = sylvester(1).matrix;
  CHECK(tensor(h2, h2) == sylvester(2).matrix);
  CHECK(det_exact(gram(sylvester(3).matrix)) == 16777216);
  CHECK(det_exact(gram(sylvester(4).matrix)) == ipow(16, 16));
}

TEST_CASE("paley type I") {
  CHECK(gram(paley_I(3).matrix) == scalar(4, 4));
  const Construction h8 = paley_I(7);
  CHECK(gram(h8.matrix) == scalar(8, 8));
  CHECK(abs(det_exact(h8.matrix)) == ipow(8, 4));
  CHECK(paley_I(11).matrix.rows() == 12);
  // Skew: H - I is skew-symmetric.
  const SignMatrix h = paley_I(11).matrix;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      if (i != j) CHECK(h(i, j) == -h(j, i));
  CHECK_THROWS_AS(paley_I(5), InvalidArgument);
  CHECK_THROWS_AS(paley_I(15), InvalidArgument);
}

TEST_CASE("cohn border") {
  const Construction c5 = cohn_border(5);
  CHECK(c5.matrix.rows() == 6);
  CHECK(abs(det_exact(c5.matrix)) == 96);
  check_predicted_entries(c5);
  const Construction c13 = cohn_border(13);
  // (q+1)^2 (q-1)^(q-1)
  CHECK(det_exact(gram(c13.matrix)) == ipow(14, 2) * ipow(12, 12));
  CHECK_THROWS_AS(cohn_border(7), InvalidArgument);
}

TEST_CASE("excess border") {
  const SignMatrix j4m2i = SignMatrix::generate(4, 4, [](std::size_t i, std::size_t j) { return i == j ? -1 : 1; });
  const Construction b5 = excess_border(j4m2i);
  CHECK(b5.matrix.rows() == 5);
  CHECK(abs(det_exact(b5.matrix)) == 48);
  check_predicted_entries(b5);

  CHECK(abs(det_exact(excess_border(sylvester(1).matrix).matrix)) == 4);

  const Construction b17 = excess_border(tensor(j4m2i, j4m2i));
  CHECK(abs(det_exact(b17.matrix)) == ipow(16, 8) * 5);
  CHECK(det_exact(gram(b17.matrix)) == b17.certificate.predicted_gram_det);
  CHECK_THROWS_AS(excess_border(SignMatrix::filled(3, 3, 1)), InvalidArgument);
}

TEST_CASE("affine plane incidence") {
  const ZMatrix a2 = affine_plane(2);
  CHECK(a2.rows() == 4);
  CHECK(a2.cols() == 6);
  for (std::size_t i = 0; i < 4; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < 6; ++j) s += a2(i, j);
    CHECK(s == 3);
  }
  const ZMatrix a3 = affine_plane(3);
  CHECK(a3 * a3.transposed() == aI_plus_bJ(9, 3, 1));
  const ZMatrix a5 = affine_plane(5);
  const ZMatrix g5 = a5 * a5.transposed();
  for (std::size_t i = 0; i < 25; ++i)
    for (std::size_t j = 0; j < 25; ++j) CHECK(g5(i, j) == (i == j ? 6 : 1));
}

TEST_CASE("orthogonal sign matrix from the affine plane") {
  const Construction m3 = bw_ortho_M(3);
  CHECK(m3.matrix.rows() == 9);
  CHECK(m3.matrix.cols() == 12);
  // Gram is (p^2 + p) I: each row has p^2 + p entries.
  CHECK(gram(m3.matrix) == scalar(9, 12));
  const Construction m7 = bw_ortho_M(7);
  CHECK(m7.matrix.cols() == 56);
  CHECK(gram(m7.matrix) == scalar(49, 56));

  // Each row restricted to a parallel class is a row of C.
  const SignMatrix c = shifted_core(PrimeModulus(3));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t cls = 0; cls < 4; ++cls) {
      bool found = false;
      for (std::size_t r = 0; r < 3; ++r) {
        bool same = true;
        for (std::size_t t = 0; t < 3; ++t) same = same && m3.matrix(i, 3 * cls + t) == c(r, t);
        found = found || same;
      }
      CHECK(found);
    }
}

TEST_CASE("orthogonal block rows") {
  const Construction n3 = bw_N(3);
  CHECK(n3.matrix.rows() == 15);
  CHECK(n3.matrix.cols() == 24);
  CHECK(gram(n3.matrix) == scalar(15, 24));
  const Construction n7 = bw_N(7);
  CHECK(n7.matrix.rows() == 63);
  CHECK(n7.matrix.cols() == 112);
  CHECK(gram(n7.matrix) == scalar(63, 112));
  CHECK(gram(n7.matrix.submatrix(0, 0, 7, 112)) == scalar(7, 2 * 7 * 8));
}

TEST_CASE("brouwer-whiteman") {
  const Construction w = brouwer_whiteman(3);
  CHECK(w.matrix.rows() == 25);
  CHECK(gram(w.matrix) == aI_plus_bJ(25, 24, 1));
  CHECK(abs(det_exact(w.matrix)) == 7 * ipow(24, 12));
  CHECK(row_sums(w.matrix) == std::vector<long>(25, 7));
  const Construction w7 = brouwer_whiteman(7);
  CHECK(w7.matrix.rows() == 113);
  CHECK(gram(w7.matrix) == aI_plus_bJ(113, 112, 1));
  CHECK(row_sums(w7.matrix) == std::vector<long>(113, 15));
}

TEST_CASE("doubling") {
  CHECK(doubling(SignMatrix::filled(1, 1, 1)).matrix == SignMatrix::from_strings({"++", "+-"}));
  const Construction d = doubling(brouwer_whiteman(3).matrix);
  CHECK(d.matrix.rows() == 50);
  CHECK(abs(det_exact(d.matrix)) == 98 * ipow(48, 24));
  const ZMatrix g = gram(d.matrix);
  CHECK(g.submatrix(0, 25, 25, 25) == ZMatrix(25, 25));
  check_predicted_entries(d);
  CHECK_THROWS_AS(doubling(sylvester(2).matrix), InvalidArgument);
}

TEST_CASE("two-circulant border polynomial") {
  CHECK(border_gram_det(13, -7) == 53824 * ipow(24, 24));
  CHECK(border_gram_det(13, -7) == ipow(232 * ipow(24, 12), 2));
  CHECK(border_gram_det(15, -7) == ipow(268 * ipow(28, 14), 2));
  for (long k : {3L, 7L, 13L}) CHECK(border_gram_det(k, 0) == ipow(4 * k - 2, 2) * ipow(2 * k - 2, 2 * k - 2));
}

TEST_CASE("two-circulant border assembly") {
  // k = 3: r^2 + s^2 = 10 gives (+-3, +-1) classes.
  const CirculantPair pair(SignVector{1, 1, 1}, SignVector{1, -1, -1});
  for (Lead lead : {Lead::PlusR, Lead::MinusR, Lead::PlusS, Lead::MinusS}) {
    const BorderConstruction b = two_circulant_border(pair, Variant::M2, lead);
    CHECK(b.construction.matrix.rows() == 7);
    check_predicted_entries(b.construction);
    const Integer d = det_exact(b.construction.matrix);
    CHECK(d * d == b.construction.certificate.predicted_gram_det);
    CHECK(b.options.size() == 4);
  }
  CHECK(default_lead(pair) == Lead::MinusR);
  CHECK(parse_lead("-s") == Lead::MinusS);
  CHECK(parse_variant("m1") == Variant::M1);
}

TEST_CASE("osds") {
  const Construction m15 = osds(3);
  CHECK(m15.matrix.rows() == 15);
  CHECK(det_exact(gram(m15.matrix)) == 16 * ipow(12, 12) * ipow(28, 2));
  check_predicted_entries(m15);
  CHECK_FALSE(is_hadamard(m15.matrix));
  for (std::uint64_t q : {7u, 11u}) {
    const Construction c = osds(q);
    const long lq = static_cast<long>(q);
    CHECK(det_exact(gram(c.matrix)) == 16 * ipow(4 * lq, 3 * q + 3) * ipow(4 * lq + 16, q - 1));
  }
  CHECK_THROWS_AS(osds(5), InvalidArgument);
}

TEST_CASE("osds from a supplied core") {
  const SignMatrix c = shifted_core(PrimeModulus(7));
  const Construction a = osds_from_shifted_core(c);
  CHECK(a.matrix == osds(7).matrix);
  CHECK(a.certificate.parameters.at("external_core") == 1);
  CHECK_THROWS_AS(osds_from_shifted_core(SignMatrix::filled(3, 3, 1)), InvalidArgument);
}

TEST_CASE("ehlich block matrices") {
  CHECK(ehlich_block_matrix(7, Partition({7})) == aI_plus_bJ(7, 4, 3));
  CHECK(det_exact(ehlich_block_matrix(7, Partition({2, 2, 1, 1, 1}))) == 344064);
  CHECK(det_exact(ehlich_block_matrix(7, Partition({7}))) == 102400);
  CHECK_THROWS_AS(ehlich_block_matrix(8, Partition({8})), InvalidArgument);
  CHECK_THROWS_AS(ehlich_block_matrix(7, Partition({3, 3})), InvalidArgument);
  CHECK(ehlich_block_form(11, Partition({2, 1})).rows() == 3);
}

TEST_CASE("size guard") {
  const std::size_t saved = size_guard();
  set_size_guard(20);
  CHECK_THROWS_AS(brouwer_whiteman(3), SizeGuardExceeded);
  CHECK_NOTHROW(paley_I(11));
  set_size_guard(saved);
}
