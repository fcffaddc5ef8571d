#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "maxdet/circulant.hpp"
#include "maxdet/numeric.hpp"
#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"

namespace maxdet {

struct SearchOptions {
  unsigned threads = 1;
  std::size_t max_witnesses = 8;
};

struct SearchResult {
  Integer max_det;
  std::vector<SignMatrix> witnesses;  // first ones in enumeration order
  // Depends on the thread count: workers share the incumbent.
  std::uint64_t nodes_visited = 0;
};

// Maximum |det| over all n x n sign matrices, 1 <= n <= 7. Rows are normalized
// to start with +1, the first row is all +1 and the others are taken in
// increasing order; partial row sets are pruned when the leading Gram minor
// times n^(rows left) falls below the incumbent.
SearchResult exhaustive_maxdet(int n, const SearchOptions& options = {});

enum class PairMode { All, First, FirstPerClass };

struct PairSearchOptions {
  unsigned threads = 1;
  bool allow_large = false;  // permit 15 < k <= 31
};

struct PairSearchResult {
  std::size_t k = 0;
  std::vector<std::pair<long, long>> classes;  // (r, s) with r^2 + s^2 = 4k - 2
  std::vector<CirculantPair> pairs;            // sorted
  std::uint64_t candidates = 0;                // first rows examined
};

inline constexpr std::size_t kDefaultPairLimit = 15;
inline constexpr std::size_t kHardPairLimit = 31;

// Circulant pairs with RR^T + SS^T = (2k - 2)I + 2J, matched by autocorrelation
// key. First returns the smallest pair overall, FirstPerClass the smallest in
// every (r, s) class.
PairSearchResult circulant_pair_search(std::size_t k, PairMode mode = PairMode::All,
                                       const PairSearchOptions& options = {});

struct GammaResult {
  Integer gamma;
  ZMatrix argmax;  // first maximizer in enumeration order
  std::uint64_t enumerated = 0;
};

// Entries allowed off the diagonal of the class C_m at order n: e = 3 mod 4, |e| < n.
std::vector<long> gamma_entry_set(long n);

// Largest determinant of a symmetric m x m matrix with diagonal n and
// off-diagonal entries from entry_set (default: all allowed). A brute-force
// oracle; throws SizeGuardExceeded beyond 5e7 candidates.
GammaResult gamma_oracle(long n, std::size_t m, const std::vector<long>& entry_set = {});

}  // namespace maxdet
