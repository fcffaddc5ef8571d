#pragma once

#include <cstddef>
#include <vector>

#include "maxdet/numeric.hpp"
#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"

namespace maxdet {

// M M^T. Entry (i, j) is the inner product of rows i and j.
ZMatrix gram(const SignMatrix& m);
ZMatrix gram(const ZMatrix& m);

// Exact determinant by fraction-free elimination with row pivoting.
Integer det_exact(const ZMatrix& a);
Integer det_exact(const SignMatrix& m);

// Kronecker product [a_ij B].
SignMatrix tensor(const SignMatrix& a, const SignMatrix& b);
ZMatrix tensor(const ZMatrix& a, const ZMatrix& b);

template <class M>
using BlockGrid = std::vector<std::vector<M>>;

// Concatenates a grid of blocks. Blocks in a grid row share their row count,
// blocks in a grid column share their column count.
SignMatrix block_assemble(const BlockGrid<SignMatrix>& grid);
ZMatrix block_assemble(const BlockGrid<ZMatrix>& grid);

Integer excess(const SignMatrix& m);
std::vector<long> row_sums(const SignMatrix& m);
std::vector<long> col_sums(const SignMatrix& m);

// det [[aI + bJ, cJ], [cJ, aI + dJ]] of order 2k, in closed form:
// (a^2 + a k (b + d) + k^2 (b d - c^2)) a^(2k-2).
Rational block_jj_det(const Integer& a, const Rational& b, const Rational& c, const Rational& d,
                      std::size_t k);

}  // namespace maxdet
