#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/partition.hpp"
#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"

namespace maxdet {

struct NormalizedRows {
  SignMatrix matrix;
  std::vector<std::int8_t> signs;  // result = diag(signs) * input
};

// Negates every row with an odd number of -1 entries. Odd order only.
NormalizedRows normalize_rows(const SignMatrix& m);

bool is_hadamard(const SignMatrix& m);

enum class GramTag { HadamardDiagonal, BarbaOptimal, TwoMod4Optimal, EhlichBlock, Unclassified };

std::string_view gram_tag_name(GramTag tag);

struct GramClass {
  GramTag tag = GramTag::Unclassified;
  std::optional<Partition> partition;  // EhlichBlock only
  // Trace: negate rows by `signs`, then list them in `order`. For tagged
  // results the Gram of the traced matrix equals canonical_gram exactly.
  std::vector<std::int8_t> signs;
  std::vector<std::size_t> order;
  std::optional<std::array<std::size_t, 3>> violating_triple;
  std::string detail;
};

// Classifies a Gram candidate directly; the trace then acts by conjugation.
GramClass classify_gram_matrix(const ZMatrix& g);
GramClass classify_gram(const SignMatrix& m);

// D P G P^T D for the recorded trace.
ZMatrix apply_trace(const ZMatrix& g, const GramClass& cls);
// nI, (n-1)I + J, diag((n-2)I + 2J, (n-2)I + 2J) or the Ehlich-block matrix.
std::optional<ZMatrix> canonical_gram(const GramClass& cls, std::size_t n);

struct VerificationReport {
  std::size_t order = 0;
  Integer det;
  Integer det_sq;
  GramClass gram_class;
  BoundValue bound;
  std::string ratio;
  std::vector<long> row_sums;
  Integer excess;
  FeasibilityReport feasibility;
  std::optional<Family> family;
  std::map<std::string, long> parameters;
};

// Compares the Gram matrix of m with the certificate entrywise and, when
// check_det is set, det(M M^T) with the predicted value. Throws
// VerificationMismatch at the first disagreement.
void check_certificate(const SignMatrix& m, const Certificate& cert, bool check_det = true);

// Rebuilds the certificate that a matrix of the given family and shape must
// satisfy. Families with data inputs (doubling, excess-border, two-circulant)
// take that data from m itself and revalidate it. Throws VerificationMismatch
// when m cannot be a member of the family.
Certificate expected_certificate(Family family, const SignMatrix& m);

VerificationReport verify(const SignMatrix& m, unsigned digits = 4);
VerificationReport verify(const SignMatrix& m, Family expected, unsigned digits = 4);
VerificationReport verify(const SignMatrix& m, const Certificate& expected, unsigned digits = 4);

}  // namespace maxdet
