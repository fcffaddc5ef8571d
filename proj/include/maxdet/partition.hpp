#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace maxdet {

// Multiset of positive part sizes, stored in non-increasing order.
class Partition {
 public:
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const noexcept { return parts_; }
  long total() const noexcept { return total_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::string to_string() const;  // "[2,2,1,1,1]"

  // Parts as equal as possible: sizes floor(n/s) and ceil(n/s).
  static Partition balanced(long n, long s);

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<long> parts_;
  long total_ = 0;
};

// Calls fn for every partition of n into at most max_parts parts (0 = no
// limit), largest part first, in reverse lexicographic order.
void for_each_partition(long n, std::size_t max_parts,
                        const std::function<void(const std::vector<long>&)>& fn);

}  // namespace maxdet
