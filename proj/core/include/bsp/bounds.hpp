#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsp/family.hpp"

namespace bsp {

struct BoundReport {
  std::string name;
  std::int64_t lhs = 0;  ///< the product being bounded
  std::int64_t rhs = 0;  ///< the bound
  bool applicable = true;
  bool pass = true;      ///< vacuously true when not applicable
  bool equality = false;
};

/// |A|*|B| <= (d+1) 2^d for any spanning pair.
BoundReport check_thm4(std::size_t d, std::int64_t size_a, std::int64_t size_b);
BoundReport check_thm4(const BspPair& p);

/// |A|*|B| <= d 2^d + 2d, applicable when both sizes are at least d+2.
BoundReport check_thm3(std::size_t d, std::int64_t size_a, std::int64_t size_b);
BoundReport check_thm3(const BspPair& p);

enum class CubeSide { none, a, b };

struct EqualityClassification {
  bool equality_case = false;
  /// Which family is the cube class when equality holds.
  CubeSide cube_side = CubeSide::none;
  /// Equality holds and the shape is as predicted: one side of size d+1, the
  /// other of size 2^d with the cube pair's product table. True when not an
  /// equality case.
  bool consistent = true;
};

EqualityClassification check_thm6_equality(const BspPair& p);

struct ConjectureViolation {
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  int k = 0;
  std::int64_t product = 0;
  std::int64_t bound = 0;
};

struct ConjectureReport {
  std::size_t d = 0;
  std::size_t pairs_checked = 0;
  /// (pair, k) combinations whose size hypothesis held.
  std::size_t implications_tested = 0;
  std::vector<ConjectureViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// For each size pair and each k in [0, d]: if both sizes exceed 2^(k-1)(d-k+2)
/// then the product must not exceed (2^(d-k)+k) 2^k (d-k+1).
ConjectureReport check_conjecture1(const std::vector<std::pair<std::int64_t, std::int64_t>>& sizes,
                                   std::size_t d);

/// The size threshold's doubled value 2^k (d-k+2), kept integral.
std::int64_t conjecture1_threshold_times_two(std::size_t d, int k);
std::int64_t conjecture1_bound(std::size_t d, int k);

}  // namespace bsp
