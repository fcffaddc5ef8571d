#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxdet/bounds.hpp"
#include "maxdet/numeric.hpp"

namespace maxdet {

std::optional<Integer> is_perfect_square(const Integer& m);

// a^2 + b^2 = m with a >= b >= 0, scanning b upward from 0.
std::optional<std::pair<Integer, Integer>> sum_of_two_squares(const Integer& m);
// Every (a, b) with a >= b >= 0 and a^2 + b^2 = m, b ascending.
std::vector<std::pair<Integer, Integer>> all_two_square_representations(const Integer& m);
// "m = a^2 + b^2", or why m is not a sum of two squares.
std::string two_squares_witness(long m);

struct FeasibilityTest {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct FeasibilityReport {
  long n = 0;
  long residue_class = 0;  // n mod 4
  BoundKind applicable_bound = BoundKind::Hadamard;
  std::vector<FeasibilityTest> obstructions;
  // True when no test rules out equality in the applicable bound. Never a
  // claim that the bound is attained.
  bool not_obstructed() const;
};

FeasibilityReport feasibility(long n);

}  // namespace maxdet
