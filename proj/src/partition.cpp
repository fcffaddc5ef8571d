#include "maxdet/partition.hpp"

#include <algorithm>
#include <functional>

#include "maxdet/errors.hpp"

namespace maxdet {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition needs at least one part");
  for (long p : parts_) {
    if (p <= 0) throw InvalidArgument("partition parts must be positive");
    total_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::balanced(long n, long s) {
  if (n <= 0 || s <= 0 || s > n) throw InvalidArgument("balanced partition needs 1 <= s <= n");
  std::vector<long> parts(static_cast<std::size_t>(s), n / s);
  for (long i = 0; i < n % s; ++i) parts[static_cast<std::size_t>(i)] += 1;
  return Partition(std::move(parts));
}

namespace {

void recurse(long remaining, long cap, std::size_t max_parts, std::vector<long>& current,
             const std::function<void(const std::vector<long>&)>& fn) {
  if (remaining == 0) {
    fn(current);
    return;
  }
  if (max_parts && current.size() == max_parts) return;
  for (long part = std::min(cap, remaining); part >= 1; --part) {
    current.push_back(part);
    recurse(remaining - part, part, max_parts, current, fn);
    current.pop_back();
  }
}

}  // namespace

void for_each_partition(long n, std::size_t max_parts,
                        const std::function<void(const std::vector<long>&)>& fn) {
  if (n <= 0) throw InvalidArgument("partitions of a non-positive integer");
  std::vector<long> current;
  recurse(n, n, max_parts, current, fn);
}

}  // namespace maxdet
