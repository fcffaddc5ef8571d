#include <doctest.h>

#include "maxdet/errors.hpp"
#include "maxdet/feasibility.hpp"

using namespace maxdet;

namespace {

bool brute_two_squares(long m) {
  for (long a = 0; a * a <= m; ++a)
    for (long b = 0; b <= a; ++b)
      if (a * a + b * b == m) return true;
  return false;
}

}  // namespace

TEST_CASE("perfect squares") {
  CHECK(is_perfect_square(0) == Integer(0));
  CHECK(is_perfect_square(49) == Integer(7));
  CHECK_FALSE(is_perfect_square(50).has_value());
  CHECK_THROWS_AS(is_perfect_square(-1), InvalidArgument);
}

TEST_CASE("two squares against brute force") {
  for (long m = 0; m < 600; ++m) {
    INFO("m = " << m);
    const auto ab = sum_of_two_squares(m);
    CHECK(ab.has_value() == brute_two_squares(m));
    if (ab) {
      CHECK(ab->first >= ab->second);
      CHECK(ab->first * ab->first + ab->second * ab->second == m);
    }
  }
  const auto reps = all_two_square_representations(50);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == std::pair<Integer, Integer>(7, 1));
  CHECK(reps[1] == std::pair<Integer, Integer>(5, 5));
}

TEST_CASE("two squares witness text") {
  CHECK(two_squares_witness(10) == "10 = 3^2 + 1^2");
  CHECK(two_squares_witness(21).find("not a sum of two squares") != std::string::npos);
}

TEST_CASE("feasibility by residue") {
  CHECK(feasibility(8).not_obstructed());
  CHECK(feasibility(8).applicable_bound == BoundKind::Hadamard);
  CHECK(feasibility(5).not_obstructed());
  CHECK(feasibility(13).not_obstructed());
  CHECK_FALSE(feasibility(9).not_obstructed());
  CHECK_FALSE(feasibility(7).not_obstructed());
  CHECK(feasibility(6).not_obstructed());
  CHECK_FALSE(feasibility(22).not_obstructed());
  CHECK(feasibility(22).residue_class == 2);
  CHECK_THROWS_AS(feasibility(0), InvalidArgument);
}
