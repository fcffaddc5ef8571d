#include "maxdet/bounds.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "maxdet/errors.hpp"
#include "maxdet/feasibility.hpp"

namespace maxdet {

namespace {

std::string pow_text(long base, long exponent) {
  if (exponent == 1) return std::to_string(base);
  return std::to_string(base) + "^" + std::to_string(exponent);
}

void require_positive(long n) {
  if (n < 1) throw InvalidArgument("order must be positive, got " + std::to_string(n));
}

void require_3mod4(long n, std::string_view what) {
  if (n < 3 || n % 4 != 3) throw InvalidArgument(std::string(what) + " needs n = 3 mod 4, got " + std::to_string(n));
}

}  // namespace

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Hadamard: return "hadamard";
    case BoundKind::Barba: return "barba";
    case BoundKind::EhlichWojtas: return "ew";
    case BoundKind::EhlichSmooth: return "ehlich";
    case BoundKind::EhlichPartition: return "ehlich-partition";
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind k : {BoundKind::Hadamard, BoundKind::Barba, BoundKind::EhlichWojtas, BoundKind::EhlichSmooth,
                      BoundKind::EhlichPartition})
    if (bound_kind_name(k) == name) return k;
  return std::nullopt;
}

Integer hadamard_bound_sq(long n) {
  require_positive(n);
  return ipow(n, static_cast<unsigned long>(n));
}

Integer barba_bound_sq(long n) {
  require_positive(n);
  if (n % 2 == 0) throw InvalidArgument("Barba bound needs odd n, got " + std::to_string(n));
  return Integer(2 * n - 1) * ipow(n - 1, static_cast<unsigned long>(n - 1));
}

Integer ew_bound(long n) {
  if (n < 2 || n % 4 != 2) throw InvalidArgument("Ehlich-Wojtas bound needs n = 2 mod 4, got " + std::to_string(n));
  return Integer(2 * n - 2) * ipow(n - 2, static_cast<unsigned long>((n - 2) / 2));
}

Integer ehlich_partition_det(long n, const Partition& partition) {
  if (partition.total() != n) {
    throw InvalidArgument("partition " + partition.to_string() + " does not sum to " + std::to_string(n));
  }
  // prod a_i - sum r_i prod_{j != i} a_j, accumulated one part at a time.
  Integer prod = 1, weighted = 0;
  for (long r : partition.parts()) {
    const long a = n - 3 + 4 * r;
    weighted = weighted * a + prod * r;
    prod *= a;
  }
  const long s = static_cast<long>(partition.size());
  return ipow(n - 3, static_cast<unsigned long>(n - s)) * (prod - weighted);
}

OptimalPartition ehlich_optimal_partition(long n) {
  require_3mod4(n, "ehlich_optimal_partition");
  if (n < 7) throw InvalidArgument("ehlich_optimal_partition needs n >= 7");
  std::vector<long> candidates;
  if (n == 7) candidates = {5};
  else if (n == 11) candidates = {5, 6};
  else if (n < 59) candidates = {6};
  else if (n == 59) candidates = {6, 7};
  else candidates = {7};

  std::optional<OptimalPartition> best;
  for (long f : candidates) {
    Partition p = Partition::balanced(n, f);
    Integer v = ehlich_partition_det(n, p);
    if (!best || v > best->value) best = OptimalPartition{std::move(p), std::move(v)};
  }
  return *best;
}

namespace {

struct PartitionSearch {
  long n;
  std::size_t max_parts;
  std::vector<Integer> powers;  // powers[s] = (n - 3)^(n - s)
  std::vector<long> current;
  std::optional<OptimalPartition> best;

  void visit(long remaining, long cap, const Integer& prod, const Integer& weighted) {
    if (remaining == 0) {
      Integer v = powers[current.size()] * (prod - weighted);
      if (!best || v > best->value) best = OptimalPartition{Partition(current), std::move(v)};
      return;
    }
    if (max_parts && current.size() == max_parts) return;
    for (long r = std::min(cap, remaining); r >= 1; --r) {
      const long a = n - 3 + 4 * r;
      current.push_back(r);
      visit(remaining - r, r, prod * a, weighted * a + prod * r);
      current.pop_back();
    }
  }
};

}  // namespace

OptimalPartition ehlich_partition_max_exhaustive(long n, std::size_t max_parts, unsigned threads) {
  require_3mod4(n, "ehlich_partition_max_exhaustive");
  std::vector<Integer> powers(static_cast<std::size_t>(n) + 1);
  for (long s = 0; s <= n; ++s) powers[static_cast<std::size_t>(s)] = ipow(n - 3, static_cast<unsigned long>(n - s));

  // Work items are the choices of the largest part; each is searched
  // independently and the results are reduced in largest-part order.
  std::vector<std::optional<OptimalPartition>> results(static_cast<std::size_t>(n) + 1);
  auto run = [&](long first) {
    PartitionSearch search{n, max_parts, powers, {first}, std::nullopt};
    const long a = n - 3 + 4 * first;
    search.visit(n - first, first, Integer(a), Integer(first));
    results[static_cast<std::size_t>(first)] = std::move(search.best);
  };
  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    for (long first = n; first >= 1; --first) run(first);
  } else {
    std::mutex m;
    long next = n;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          long first;
          {
            std::lock_guard lock(m);
            if (next < 1) return;
            first = next--;
          }
          run(first);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::optional<OptimalPartition> best;
  for (long first = n; first >= 1; --first) {
    auto& r = results[static_cast<std::size_t>(first)];
    if (r && (!best || r->value > best->value)) best = std::move(r);
  }
  return *best;
}

Rational ehlich_smooth_bound(long n) {
  require_3mod4(n, "ehlich_smooth_bound");
  if (n < 63) throw InvalidArgument("the smooth Ehlich bound needs n >= 63");
  Rational mu_sq(Integer(4) * ipow(11, 6), ipow(7, 7));
  mu_sq.canonicalize();
  Rational out = mu_sq * Rational(Integer(n) * ipow(n - 1, 6) * ipow(n - 3, static_cast<unsigned long>(n - 7)));
  out.canonicalize();
  return out;
}

namespace {

std::string barba_note(long n) {
  const long m = 2 * n - 1;
  if (!is_perfect_square(m)) return "2n-1 = " + std::to_string(m) + " is not a perfect square: not attainable";
  if (n % 4 != 1) return "n is not 1 mod 4: not attainable";
  return "2n-1 = " + std::to_string(m) + " = " + isqrt(m).get_str() + "^2: not obstructed";
}

std::string ew_note(long n) {
  const long m = 2 * n - 2;
  if (auto ab = sum_of_two_squares(m)) {
    return "2n-2 = " + std::to_string(m) + " = " + ab->first.get_str() + "^2 + " + ab->second.get_str() +
           "^2: not obstructed";
  }
  return "2n-2 = " + std::to_string(m) + " not a sum of two squares: not attainable";
}

BoundValue attach_3mod4(BoundValue b) {
  const long n = b.n;
  if (n % 4 == 3) {
    b.barba_gram_bound = Rational(barba_bound_sq(n));
    if (n >= 63) b.ehlich_gram_bound = ehlich_smooth_bound(n);
    else if (n >= 7) b.ehlich_gram_bound = Rational(ehlich_optimal_partition(n).value);
  }
  return b;
}

}  // namespace

BoundValue bound_of_kind(long n, BoundKind kind) {
  require_positive(n);
  BoundValue b{kind, n, Rational(0), {}, std::nullopt, std::nullopt, std::nullopt};
  switch (kind) {
    case BoundKind::Hadamard:
      b.gram_bound = Rational(hadamard_bound_sq(n));
      b.attainable_note = (n == 1 || n == 2 || n % 4 == 0) ? "attained exactly by a Hadamard matrix of order n"
                                                          : "n is not 1, 2 or 0 mod 4: not attainable";
      break;
    case BoundKind::Barba:
      b.gram_bound = Rational(barba_bound_sq(n));
      b.attainable_note = barba_note(n);
      break;
    case BoundKind::EhlichWojtas: {
      const Integer e = ew_bound(n);
      b.gram_bound = Rational(e * e);
      b.attainable_note = ew_note(n);
      break;
    }
    case BoundKind::EhlichSmooth:
      b.gram_bound = ehlich_smooth_bound(n);
      b.attainable_note = "smooth relaxation of the optimal Ehlich-block determinant";
      break;
    case BoundKind::EhlichPartition: {
      OptimalPartition opt = ehlich_optimal_partition(n);
      b.gram_bound = Rational(opt.value);
      b.partition = opt.partition;
      b.attainable_note = "attainable only by a matrix with Ehlich-block Gram " + opt.partition.to_string();
      break;
    }
  }
  return attach_3mod4(std::move(b));
}

BoundValue bound_for(long n) {
  require_positive(n);
  if (n % 4 == 0) return bound_of_kind(n, BoundKind::Hadamard);
  if (n % 4 == 2) return bound_of_kind(n, BoundKind::EhlichWojtas);
  if (n % 4 == 3 && n >= 63) return bound_of_kind(n, BoundKind::EhlichSmooth);
  return bound_of_kind(n, BoundKind::Barba);
}

std::string ratio_decimal(const Integer& det_sq, const Rational& bound_sq, unsigned digits) {
  if (det_sq < 0) throw InvalidArgument("ratio_decimal: negative squared determinant");
  if (bound_sq <= 0) throw InvalidArgument("ratio_decimal: bound must be positive");
  Rational x = Rational(det_sq) / bound_sq;
  x.canonicalize();
  return sqrt_decimal(x, digits);
}

std::string bound_sq_text(const BoundValue& b) {
  const long n = b.n;
  switch (b.kind) {
    case BoundKind::Hadamard: return pow_text(n, n);
    case BoundKind::Barba: return std::to_string(2 * n - 1) + "·" + pow_text(n - 1, n - 1);
    case BoundKind::EhlichWojtas: return pow_text(2 * n - 2, 2) + "·" + pow_text(n - 2, n - 2);
    case BoundKind::EhlichSmooth:
      return "(4·11^6/7^7)·" + std::to_string(n) + "·" + pow_text(n - 1, 6) + "·" + pow_text(n - 3, n - 7);
    case BoundKind::EhlichPartition:
      return "partition " + (b.partition ? b.partition->to_string() : std::string("?"));
  }
  return {};
}

std::string bound_root_text(const BoundValue& b) {
  const long n = b.n;
  switch (b.kind) {
    case BoundKind::Hadamard:
      return n % 2 == 0 ? pow_text(n, n / 2) : std::to_string(n) + "^(" + std::to_string(n) + "/2)";
    case BoundKind::Barba: return "√" + std::to_string(2 * n - 1) + "·" + pow_text(n - 1, (n - 1) / 2);
    case BoundKind::EhlichWojtas: return std::to_string(2 * n - 2) + "·" + pow_text(n - 2, (n - 2) / 2);
    case BoundKind::EhlichSmooth:
      return "μ·" + std::to_string(n) + "^(1/2)·" + pow_text(n - 1, 3) + "·" + pow_text(n - 3, (n - 7) / 2);
    case BoundKind::EhlichPartition: return "√" + to_string(b.gram_bound);
  }
  return {};
}

}  // namespace maxdet
