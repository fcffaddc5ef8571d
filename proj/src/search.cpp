#include "maxdet/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "maxdet/errors.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/kernels.hpp"
#include "maxdet/linalg.hpp"

namespace maxdet {

namespace {

// Runs task(i) for i in [0, count) on up to `threads` workers.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Depth-first search over increasing row masks with an incremental symmetric
// Bareiss elimination of the Gram matrix. stage[m][l] is entry (m, l) of row m
// after l elimination steps; pivot[l] = stage[l][l] is the leading minor of
// order l + 1.
struct MaxdetSearch {
  int n;
  std::uint32_t limit;  // masks are even numbers below 2^n
  std::atomic<std::int64_t>* shared_best;
  std::size_t max_witnesses;
  std::vector<std::int64_t> headroom;  // n^(n - 1 - m)
  std::vector<std::uint32_t> rows;
  std::int64_t stage[7][7] = {};
  std::int64_t best = 0;
  std::vector<std::vector<std::uint32_t>> witnesses;
  std::uint64_t nodes = 0;

  std::int64_t inner(std::uint32_t a, std::uint32_t b) const { return n - 2 * std::popcount(a ^ b); }

  // Leading minor after appending `mask` as row m.
  std::int64_t push(std::uint32_t mask) {
    const std::size_t m = rows.size();
    rows.push_back(mask);
    std::int64_t cur[7];
    for (std::size_t j = 0; j <= m; ++j) cur[j] = inner(mask, rows[j]);
    std::int64_t prev = 1;
    for (std::size_t k = 0; k < m; ++k) {
      stage[m][k] = cur[k];
      const std::int64_t piv = stage[k][k];
      for (std::size_t j = k + 1; j <= m; ++j) {
        const std::int64_t other = j < m ? stage[j][k] : cur[k];
        cur[j] = (piv * cur[j] - cur[k] * other) / prev;
      }
      prev = piv;
    }
    stage[m][m] = cur[m];
    return cur[m];
  }

  void record() {
    const std::int64_t d = stage[n - 1][n - 1];
    if (d < best) return;
    if (d > best) {
      best = d;
      witnesses.clear();
      std::int64_t seen = shared_best->load();
      while (seen < d && !shared_best->compare_exchange_weak(seen, d)) {
      }
    }
    if (witnesses.size() < max_witnesses) witnesses.push_back(rows);
  }

  void descend(std::uint32_t from) {
    const std::size_t m = rows.size();
    for (std::uint32_t mask = from; mask < limit; mask += 2) {
      ++nodes;
      const std::int64_t minor = push(mask);
      const std::int64_t incumbent = std::max(best, shared_best->load(std::memory_order_relaxed));
      if (minor > 0 && minor * headroom[m] >= incumbent) {
        if (m + 1 == static_cast<std::size_t>(n)) record();
        else descend(mask + 2);
      }
      rows.pop_back();
    }
  }
};

SignMatrix rows_to_matrix(int n, const std::vector<std::uint32_t>& rows) {
  return SignMatrix::generate(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                              [&](std::size_t i, std::size_t j) { return (rows[i] >> j) & 1u ? -1 : 1; });
}

}  // namespace

SearchResult exhaustive_maxdet(int n, const SearchOptions& options) {
  if (n < 1 || n > 7) throw InvalidArgument("exhaustive_maxdet supports 1 <= n <= 7, got " + std::to_string(n));
  const std::uint32_t limit = 1u << n;
  std::vector<std::int64_t> headroom(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    std::int64_t h = 1;
    for (int t = 0; t < n - 1 - m; ++t) h *= n;
    headroom[static_cast<std::size_t>(m)] = h;
  }
  std::atomic<std::int64_t> shared_best{0};

  auto make = [&] {
    MaxdetSearch s{n, limit, &shared_best, std::max<std::size_t>(1, options.max_witnesses), headroom, {}, {}, 0, {}, 0};
    s.push(0);
    return s;
  };

  std::vector<MaxdetSearch> parts;
  if (n == 1) {
    parts.push_back(make());
    parts.back().record();
  } else {
    // One work item per choice of the second row.
    std::vector<std::uint32_t> seconds;
    for (std::uint32_t mask = 2; mask < limit; mask += 2) seconds.push_back(mask);
    for (std::size_t i = 0; i < seconds.size(); ++i) parts.push_back(make());
    parallel_for(seconds.size(), options.threads, [&](std::size_t i) {
      MaxdetSearch& s = parts[i];
      const std::int64_t minor = s.push(seconds[i]);
      ++s.nodes;
      if (minor > 0) {
        if (n == 2) s.record();
        else s.descend(seconds[i] + 2);
      }
    });
  }

  SearchResult result;
  std::int64_t best = 0;
  for (const auto& s : parts) {
    best = std::max(best, s.best);
    result.nodes_visited += s.nodes;
  }
  result.max_det = isqrt(Integer(static_cast<long>(best)));
  if (result.max_det * result.max_det != best) {
    throw CertificateFailure("maximal Gram determinant " + std::to_string(best) + " is not a square");
  }
  for (const auto& s : parts) {
    if (s.best != best) continue;
    for (const auto& rows : s.witnesses) {
      if (result.witnesses.size() == options.max_witnesses) break;
      SignMatrix w = rows_to_matrix(n, rows);
      if (abs(det_exact(w)) != result.max_det) throw CertificateFailure("search witness failed re-verification");
      result.witnesses.push_back(std::move(w));
    }
  }
  return result;
}

namespace {

// Lexicographic rank of a packed row with -1 before +1 and position 0 leading.
std::uint32_t lex_rank(std::uint32_t mask, std::size_t k) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < k; ++i) v = (v << 1) | (((mask >> i) & 1u) ^ 1u);
  return v;
}

SignVector unpack(std::uint32_t mask, std::size_t k) {
  SignVector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = (mask >> i) & 1u ? -1 : 1;
  return x;
}

// All k-bit masks with the given popcount, in lexicographic rank order, with their keys.
struct RowClass {
  std::vector<std::uint32_t> masks;
  std::vector<std::uint64_t> keys;
};

RowClass rows_with_weight(std::size_t k, unsigned weight) {
  RowClass c;
  const std::uint32_t full = (1u << k) - 1u;
  if (weight == 0) {
    c.masks.push_back(0);
  } else {
    // Gosper's hack.
    for (std::uint32_t x = (1u << weight) - 1u; x <= full && x != 0;) {
      c.masks.push_back(x);
      const std::uint32_t low = x & (~x + 1u);
      const std::uint32_t ripple = x + low;
      if (ripple > full || ripple == 0) break;
      x = ripple | (((x ^ ripple) >> 2) / low);
    }
  }
  std::sort(c.masks.begin(), c.masks.end(),
            [k](std::uint32_t a, std::uint32_t b) { return lex_rank(a, k) < lex_rank(b, k); });
  c.keys.resize(c.masks.size());
  kernels::paf_keys(c.masks, static_cast<unsigned>(k), c.keys);
  return c;
}

// Key of the partner row: nibble-wise (k - 1)/2 - e_j, or none if some e_j is too large.
std::optional<std::uint64_t> complement_key(std::uint64_t key, std::size_t k) {
  const std::uint64_t half = (k - 1) / 2;
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < k / 2; ++j) {
    const std::uint64_t e = (key >> (4 * j)) & 0xF;
    if (e > half) return std::nullopt;
    out |= (half - e) << (4 * j);
  }
  return out;
}

}  // namespace

PairSearchResult circulant_pair_search(std::size_t k, PairMode mode, const PairSearchOptions& options) {
  if (k == 0) throw InvalidArgument("circulant_pair_search needs k >= 1");
  if (k > kHardPairLimit) throw InvalidArgument("circulant_pair_search supports k <= 31, got " + std::to_string(k));
  if (k > kDefaultPairLimit && !options.allow_large) {
    throw SizeGuardExceeded("circulant_pair_search caps k at 15 without the large-k override, got " +
                            std::to_string(k));
  }
  const long target = 4 * static_cast<long>(k) - 2;
  const auto reps = all_two_square_representations(target);
  if (reps.empty()) {
    throw InvalidArgument("no circulant pairs at k = " + std::to_string(k) + ": 4k-2 = " + two_squares_witness(target));
  }

  PairSearchResult result;
  result.k = k;
  for (const auto& [a, b] : reps) {
    const long la = a.get_si(), lb = b.get_si();
    for (long r : {la, -la})
      for (long s : {lb, -lb}) {
        result.classes.emplace_back(r, s);
        result.classes.emplace_back(s, r);
      }
  }
  std::sort(result.classes.begin(), result.classes.end());
  result.classes.erase(std::unique(result.classes.begin(), result.classes.end()), result.classes.end());

  const long lk = static_cast<long>(k);
  std::map<unsigned, RowClass> by_weight;
  for (const auto& [r, s] : result.classes)
    for (long sum : {r, s}) {
      const unsigned w = static_cast<unsigned>((lk - sum) / 2);
      if (!by_weight.count(w)) by_weight.emplace(w, rows_with_weight(k, w));
    }

  // Partner index per weight: (key, lexicographic position) sorted.
  std::map<unsigned, std::vector<std::pair<std::uint64_t, std::uint32_t>>> index;
  for (const auto& [w, rc] : by_weight) {
    auto& idx = index[w];
    idx.reserve(rc.masks.size());
    for (std::uint32_t i = 0; i < rc.masks.size(); ++i) idx.emplace_back(rc.keys[i], i);
    std::sort(idx.begin(), idx.end());
  }

  const bool first_only = mode != PairMode::All;
  std::vector<std::vector<CirculantPair>> per_class(result.classes.size());
  std::vector<std::uint64_t> examined(result.classes.size(), 0);
  parallel_for(result.classes.size(), options.threads, [&](std::size_t c) {
    const auto [r, s] = result.classes[c];
    const RowClass& rr = by_weight.at(static_cast<unsigned>((lk - r) / 2));
    const RowClass& ss = by_weight.at(static_cast<unsigned>((lk - s) / 2));
    const auto& idx = index.at(static_cast<unsigned>((lk - s) / 2));
    auto& out = per_class[c];
    for (std::size_t i = 0; i < rr.masks.size(); ++i) {
      ++examined[c];
      const auto want = complement_key(rr.keys[i], k);
      if (!want) continue;
      auto lo = std::lower_bound(idx.begin(), idx.end(), std::make_pair(*want, std::uint32_t{0}));
      if (lo == idx.end() || lo->first != *want) continue;
      // Positions within one key are ascending, so the first is the smallest S.
      for (auto it = lo; it != idx.end() && it->first == *want; ++it) {
        out.emplace_back(unpack(rr.masks[i], k), unpack(ss.masks[it->second], k));
        if (first_only) break;
      }
      if (first_only) break;
    }
  });

  for (std::size_t c = 0; c < per_class.size(); ++c) {
    result.candidates += examined[c];
    for (auto& p : per_class[c]) result.pairs.push_back(std::move(p));
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  if (mode == PairMode::First && result.pairs.size() > 1) result.pairs.erase(result.pairs.begin() + 1, result.pairs.end());
  return result;
}

std::vector<long> gamma_entry_set(long n) {
  std::vector<long> out;
  for (long e = -n + 1; e < n; ++e)
    if (mod(e, 4) == 3) out.push_back(e);
  return out;
}

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

// Exact determinant of a small integer matrix; entries stay far below 2^63 here.
i128 small_det(std::vector<i128> a, std::size_t m) {
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && a[p * m + k] == 0) ++p;
    if (p == m) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[p * m + j], a[k * m + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j)
        a[i * m + j] = (a[k * m + k] * a[i * m + j] - a[i * m + k] * a[k * m + j]) / prev;
    prev = a[k * m + k];
  }
  return sign * a[(m - 1) * m + (m - 1)];
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  Integer out = 0;
  Integer scale = 1;
  while (u) {
    out += scale * static_cast<unsigned long>(u % 1000000000u);
    scale *= 1000000000u;
    u /= 1000000000u;
  }
  return neg ? Integer(-out) : out;
}

}  // namespace

GammaResult gamma_oracle(long n, std::size_t m, const std::vector<long>& entry_set) {
  if (n < 3 || n % 4 != 3) throw InvalidArgument("gamma_oracle needs n = 3 mod 4, got " + std::to_string(n));
  if (m < 1 || m > 6) throw InvalidArgument("gamma_oracle supports 1 <= m <= 6");
  std::vector<long> entries = entry_set.empty() ? gamma_entry_set(n) : entry_set;
  for (long e : entries)
    if (mod(e, 4) != 3 || e <= -n || e >= n) {
      throw InvalidArgument("entry " + std::to_string(e) + " is not 3 mod 4 with magnitude below n");
    }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  const std::size_t slots = m * (m - 1) / 2;
  double count = 1;
  for (std::size_t i = 0; i < slots; ++i) count *= static_cast<double>(entries.size());
  if (count > 5e7) throw SizeGuardExceeded("gamma_oracle would enumerate " + std::to_string(count) + " matrices");

  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pos.emplace_back(i, j);

  std::vector<std::size_t> digit(slots, 0);
  std::vector<i128> a(m * m, 0);
  std::optional<i128> best;
  std::vector<i128> arg;
  GammaResult result{Integer(0), ZMatrix(m, m), 0};
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) a[i * m + i] = n;
    for (std::size_t t = 0; t < slots; ++t) {
      const auto [i, j] = pos[t];
      a[i * m + j] = a[j * m + i] = entries[digit[t]];
    }
    ++result.enumerated;
    const i128 d = small_det(a, m);
    if (!best || d > *best) {
      best = d;
      arg = a;
    }
    std::size_t t = 0;
    while (t < slots && ++digit[t] == entries.size()) digit[t++] = 0;
    if (t == slots) break;
  }
  result.gamma = to_integer(*best);
  result.argmax = ZMatrix::generate(m, m, [&](std::size_t i, std::size_t j) { return Integer(static_cast<long>(arg[i * m + j])); });
  return result;
}

}  // namespace maxdet
