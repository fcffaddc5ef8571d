#include "maxdet/feasibility.hpp"

#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

std::optional<Integer> is_perfect_square(const Integer& m) {
  if (m < 0) throw InvalidArgument("is_perfect_square of a negative integer");
  return exact_sqrt(m);
}

std::vector<std::pair<Integer, Integer>> all_two_square_representations(const Integer& m) {
  if (m < 0) throw InvalidArgument("sum of two squares of a negative integer");
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer b = 0; 2 * b * b <= m; ++b) {
    if (auto a = exact_sqrt(m - b * b)) out.emplace_back(*a, b);
  }
  return out;
}

std::optional<std::pair<Integer, Integer>> sum_of_two_squares(const Integer& m) {
  if (m < 0) throw InvalidArgument("sum of two squares of a negative integer");
  for (Integer b = 0; 2 * b * b <= m; ++b) {
    if (auto a = exact_sqrt(m - b * b)) return std::make_pair(*a, b);
  }
  return std::nullopt;
}

namespace {

// A prime p = 3 mod 4 dividing m to an odd power, found by trial division.
std::optional<std::pair<long, long>> odd_power_prime_3mod4(long m) {
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2 == 1) return std::make_pair(p, e);
  }
  if (m > 1 && m % 4 == 3) return std::make_pair(m, 1L);
  return std::nullopt;
}

}  // namespace

std::string two_squares_witness(long m) {
  if (auto ab = sum_of_two_squares(m)) {
    return std::to_string(m) + " = " + ab->first.get_str() + "^2 + " + ab->second.get_str() + "^2";
  }
  std::string witness = std::to_string(m) + " not a sum of two squares";
  if (auto pe = odd_power_prime_3mod4(m)) {
    witness += " (" + std::to_string(pe->first) + " = 3 mod 4 divides it to the odd power " +
               std::to_string(pe->second) + ")";
  }
  return witness;
}

bool FeasibilityReport::not_obstructed() const {
  for (const auto& t : obstructions)
    if (!t.pass) return false;
  return true;
}

FeasibilityReport feasibility(long n) {
  if (n < 1) throw InvalidArgument("feasibility needs n >= 1");
  FeasibilityReport r;
  r.n = n;
  r.residue_class = n % 4;
  r.applicable_bound = bound_for(n).kind;

  if (n % 2 == 1) {
    const long m = 2 * n - 1;
    if (auto root = is_perfect_square(m)) {
      r.obstructions.push_back({"barba: 2n-1 perfect square", true, "2n-1 = " + std::to_string(m) + " = " + root->get_str() + "^2"});
    } else {
      const Integer f = isqrt(m);
      r.obstructions.push_back({"barba: 2n-1 perfect square", false,
                                "2n-1 = " + std::to_string(m) + " lies strictly between " + f.get_str() + "^2 and " +
                                    Integer(f + 1).get_str() + "^2"});
    }
    r.obstructions.push_back({"barba: n = 1 mod 4", n % 4 == 1, "n mod 4 = " + std::to_string(n % 4)});
  } else if (n % 4 == 2) {
    const long m = 2 * n - 2;
    r.obstructions.push_back({"ew: 2n-2 sum of two squares", sum_of_two_squares(m).has_value(),
                              "2n-2 = " + two_squares_witness(m)});
  } else {
    r.obstructions.push_back({"hadamard: order 1, 2 or 0 mod 4", true, "n = 4*" + std::to_string(n / 4)});
  }
  return r;
}

}  // namespace maxdet
