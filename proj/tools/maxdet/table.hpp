#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/numeric.hpp"

namespace maxdet::cli {

struct TableOptions {
  bool search_pairs = false;
  std::size_t max_pair_k = 15;
  unsigned digits = 4;
  unsigned threads = 1;
};

// One two-circulant border option: a row-sum class and a leading block.
struct BorderCandidate {
  long r = 0;
  long s = 0;
  Lead lead = Lead::PlusR;
  long lead_row_sum = 0;
  Integer det_sq;
  std::string ratio;
};

struct BorderCell {
  BorderCandidate best;
  Integer det;  // exact determinant of the assembled matrix
};

struct TableRow {
  long n = 0;
  BoundValue bound;
  std::string bound_text;
  std::optional<std::string> osds;
  std::optional<Integer> osds_det;
  std::optional<BorderCell> border;
};

// Every class and lead at block order k, in class then lead order. Empty when
// no pairs exist.
std::vector<BorderCandidate> border_candidates(std::size_t k, unsigned digits, unsigned threads = 1);

std::vector<TableRow> compute_table(long min, long max, const TableOptions& options);

}  // namespace maxdet::cli
