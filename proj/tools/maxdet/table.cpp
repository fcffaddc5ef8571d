#include "table.hpp"

#include <string>

#include "maxdet/errors.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/finite_field.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/search.hpp"

namespace maxdet::cli {

std::vector<BorderCandidate> border_candidates(std::size_t k, unsigned digits, unsigned threads) {
  std::vector<BorderCandidate> out;
  if (!sum_of_two_squares(4 * static_cast<long>(k) - 2)) return out;
  PairSearchOptions opts;
  opts.threads = threads;
  opts.allow_large = true;
  const PairSearchResult found = circulant_pair_search(k, PairMode::FirstPerClass, opts);
  const BoundValue bound = bound_for(2 * static_cast<long>(k) + 1);
  for (const CirculantPair& pair : found.pairs) {
    const BorderConstruction b = two_circulant_border(pair, Variant::M2, Lead::PlusR);
    for (const LeadOption& opt : b.options) {
      out.push_back({pair.r(), pair.s(), opt.lead, opt.lead_row_sum, opt.predicted_gram_det,
                     ratio_decimal(opt.predicted_gram_det, bound.gram_bound, digits)});
    }
  }
  return out;
}

namespace {

std::optional<BorderCell> best_border(std::size_t k, unsigned digits, unsigned threads) {
  const auto candidates = border_candidates(k, digits, threads);
  const BorderCandidate* best = nullptr;
  for (const auto& c : candidates)
    if (!best || c.det_sq > best->det_sq) best = &c;
  if (!best) return std::nullopt;

  // Rebuild the winner and confirm the prediction with an exact determinant.
  PairSearchOptions opts;
  opts.threads = threads;
  opts.allow_large = true;
  const auto found = circulant_pair_search(k, PairMode::FirstPerClass, opts);
  for (const CirculantPair& pair : found.pairs) {
    if (pair.r() != best->r || pair.s() != best->s) continue;
    const BorderConstruction b = two_circulant_border(pair, Variant::M2, best->lead);
    const Integer det = det_exact(b.construction.matrix);
    if (det * det != best->det_sq) {
      throw CertificateFailure("two-circulant border at k = " + std::to_string(k) + " missed its determinant");
    }
    return BorderCell{*best, det};
  }
  throw CertificateFailure("best two-circulant class vanished on rebuild");
}

}  // namespace

std::vector<TableRow> compute_table(long min, long max, const TableOptions& options) {
  if (min < 7 || max < min) throw InvalidArgument("table needs 7 <= min <= max");
  std::vector<TableRow> rows;
  for (long n = min; n <= max; ++n) {
    if (n % 4 != 3) continue;
    TableRow row;
    row.n = n;
    row.bound = bound_for(n);
    row.bound_text = bound_root_text(row.bound);

    const long q = (n - 3) / 4;
    if (q >= 3 && q % 4 == 3 && is_prime(static_cast<std::uint64_t>(q))) {
      const Construction c = osds(static_cast<std::uint64_t>(q));
      const Integer det = det_exact(c.matrix);
      if (det * det != c.certificate.predicted_gram_det) {
        throw CertificateFailure("OSDS matrix at q = " + std::to_string(q) + " missed its determinant");
      }
      row.osds_det = det;
      row.osds = ratio_decimal(det * det, row.bound.gram_bound, options.digits);
    }

    const std::size_t k = static_cast<std::size_t>((n - 1) / 2);
    if (options.search_pairs && k <= options.max_pair_k) row.border = best_border(k, options.digits, options.threads);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace maxdet::cli
