#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bsp {

/// One evaluated instance of an inequality lhs <= rhs.
struct OracleCase {
  std::vector<std::int64_t> params;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct OracleReport {
  std::string name;
  std::vector<std::string> param_names;
  std::size_t checked = 0;
  std::vector<OracleCase> equalities;
  std::vector<OracleCase> violations;
  bool pass() const { return violations.empty(); }
};

/// (d+f)(2^(d-1) + 2^(d-f)) <= d 2^d + 2d for 2 <= f <= d <= d_max.
/// Throws BadParameter unless 2 <= d_max <= 56.
OracleReport check_inequality2(std::size_t d_max);

/// 8 (C(n,j-1) + C(n,j) + C(n,j+1)) <= 7 2^n for 3 <= n <= n_max and
/// -1 <= j <= n+1. Throws BadParameter unless 3 <= n_max <= 60.
OracleReport check_binom_bound(std::size_t n_max);

/// Subsets of [m] as bitmasks, bit i standing for element i+1.
using SubsetMask = std::uint32_t;

/// Number of S in [m] with |S & s2| - |S & s1| in {-1, 0, 1}, by direct count.
std::int64_t lemma1_count(std::size_t m, SubsetMask s1, SubsetMask s2);

/// C(n,q-1) + C(n,q) + C(n,q+1) with n = p+q.
std::int64_t lemma1_formula(std::size_t p, std::size_t q);

struct Lemma1Report {
  std::size_t d = 0;
  /// Every S was enumerated for every (S1, S2); otherwise the count of each
  /// pair is the direct count over subsets of S1 xor S2 times the free part.
  bool direct = false;
  std::size_t pairs_checked = 0;
  std::int64_t max_count = 0;
  std::int64_t bound_times_eight = 0;  ///< 7 2^(d-1)
  std::vector<OracleCase> violations;  ///< params {s1, s2}, lhs 8 count, rhs 7 2^(d-1)
  /// (p, q) shapes whose count disagrees with lemma1_formula.
  std::vector<OracleCase> formula_mismatches;
  bool pass() const { return violations.empty() && formula_mismatches.empty(); }
};

/// All S1, S2 in [d-1] with |S2 \ S1| > 1 must give at most (7/8) 2^(d-1) sets.
/// Throws BadParameter unless 3 <= d <= 13.
Lemma1Report check_lemma1(std::size_t d);

struct Lemma2Report {
  std::size_t d = 0;
  /// Every family of d subsets of [d-1] with pairwise |S2 \ S1| <= 1, each
  /// sorted, in lexicographic order.
  std::vector<std::vector<SubsetMask>> families;
  /// The two families {|S| >= d-2} and {|S| <= 1}; they coincide for d = 2.
  std::vector<std::vector<SubsetMask>> expected;
  /// families == expected. Reported but not required for d = 2.
  bool matches = false;
  bool pass() const { return matches || d <= 2; }
};

/// Throws BadParameter unless 2 <= d <= 7.
Lemma2Report check_lemma2(std::size_t d);

}  // namespace bsp
