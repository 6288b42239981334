#include "bsp/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bsp/errors.hpp"

namespace bsp {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

int popcount(SubsetMask m) { return std::popcount(m); }

void record(OracleReport& r, OracleCase c) {
  ++r.checked;
  if (c.lhs > c.rhs) {
    r.violations.push_back(std::move(c));
  } else if (c.lhs == c.rhs) {
    r.equalities.push_back(std::move(c));
  }
}

void search_families(const std::vector<SubsetMask>& universe, std::size_t target,
                     std::vector<SubsetMask>& current, std::size_t next,
                     std::vector<std::vector<SubsetMask>>& out) {
  if (current.size() == target) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = next; i < universe.size(); ++i) {
    if (universe.size() - i < target - current.size()) break;
    const SubsetMask s = universe[i];
    const bool ok = std::all_of(current.begin(), current.end(), [s](SubsetMask t) {
      return popcount(s & ~t) <= 1 && popcount(t & ~s) <= 1;
    });
    if (!ok) continue;
    current.push_back(s);
    search_families(universe, target, current, i + 1, out);
    current.pop_back();
  }
}

}  // namespace

OracleReport check_inequality2(std::size_t d_max) {
  if (d_max < 2 || d_max > 56) throw BadParameter("inequality check needs 2 <= d_max <= 56");
  OracleReport r{"inequality2", {"d", "f"}, 0, {}, {}};
  for (std::int64_t d = 2; d <= static_cast<std::int64_t>(d_max); ++d)
    for (std::int64_t f = 2; f <= d; ++f) {
      const std::int64_t lhs = (d + f) * ((std::int64_t{1} << (d - 1)) + (std::int64_t{1} << (d - f)));
      const std::int64_t rhs = d * (std::int64_t{1} << d) + 2 * d;
      record(r, {{d, f}, lhs, rhs});
    }
  return r;
}

OracleReport check_binom_bound(std::size_t n_max) {
  if (n_max < 3 || n_max > 60) throw BadParameter("binomial check needs 3 <= n_max <= 60");
  OracleReport r{"binom_bound", {"n", "j"}, 0, {}, {}};
  for (std::int64_t n = 3; n <= static_cast<std::int64_t>(n_max); ++n)
    for (std::int64_t j = -1; j <= n + 1; ++j) {
      const std::int64_t sum = binom(n, j - 1) + binom(n, j) + binom(n, j + 1);
      // Near the top of the range 8 sum could overflow; compare sum with 7 2^(n-3).
      if (n >= 59) {
        record(r, {{n, j}, sum, 7 * (std::int64_t{1} << (n - 3))});
      } else {
        record(r, {{n, j}, 8 * sum, 7 * (std::int64_t{1} << n)});
      }
    }
  return r;
}

std::int64_t lemma1_count(std::size_t m, SubsetMask s1, SubsetMask s2) {
  std::int64_t count = 0;
  for (SubsetMask s = 0; s < (SubsetMask{1} << m); ++s) {
    const int diff = popcount(s & s2) - popcount(s & s1);
    if (diff >= -1 && diff <= 1) ++count;
  }
  return count;
}

std::int64_t lemma1_formula(std::size_t p, std::size_t q) {
  const auto n = static_cast<std::int64_t>(p + q), qq = static_cast<std::int64_t>(q);
  return binom(n, qq - 1) + binom(n, qq) + binom(n, qq + 1);
}

Lemma1Report check_lemma1(std::size_t d) {
  if (d < 3 || d > 13) throw BadParameter("balanced subset check needs 3 <= d <= 13");
  const std::size_t m = d - 1;
  Lemma1Report r;
  r.d = d;
  r.direct = d <= 9;
  r.bound_times_eight = 7 * (std::int64_t{1} << m);

  // Direct counts over subsets of P u Q, keyed by (p, q).
  std::map<std::pair<int, int>, std::int64_t> shape_count;
  for (int n = 2; n <= static_cast<int>(m); ++n)
    for (int p = 2; p <= n; ++p) {
      const int q = n - p;
      const auto pm = static_cast<SubsetMask>((SubsetMask{1} << p) - 1);
      const auto qm = static_cast<SubsetMask>(((SubsetMask{1} << q) - 1) << p);
      const auto count = lemma1_count(static_cast<std::size_t>(n), qm, pm);
      shape_count[{p, q}] = count;
      const auto formula = lemma1_formula(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
      if (count != formula) r.formula_mismatches.push_back({{p, q}, count, formula});
    }

  const SubsetMask full = (SubsetMask{1} << m) - 1;
  for (SubsetMask s1 = 0; s1 <= full; ++s1)
    for (SubsetMask s2 = 0; s2 <= full; ++s2) {
      const int p = popcount(s2 & ~s1), q = popcount(s1 & ~s2);
      if (p <= 1) continue;
      ++r.pairs_checked;
      const std::int64_t count = r.direct ? lemma1_count(m, s1, s2)
                                          : shape_count.at({p, q}) << (static_cast<int>(m) - p - q);
      r.max_count = std::max(r.max_count, count);
      if (8 * count > r.bound_times_eight) r.violations.push_back({{s1, s2}, 8 * count, r.bound_times_eight});
    }
  return r;
}

Lemma2Report check_lemma2(std::size_t d) {
  if (d < 2 || d > 7) throw BadParameter("small-difference family check needs 2 <= d <= 7");
  const std::size_t m = d - 1;
  Lemma2Report r;
  r.d = d;
  std::vector<SubsetMask> universe;
  for (SubsetMask s = 0; s < (SubsetMask{1} << m); ++s) universe.push_back(s);
  std::vector<SubsetMask> current;
  search_families(universe, d, current, 0, r.families);
  std::sort(r.families.begin(), r.families.end());

  std::vector<SubsetMask> large, small;
  for (SubsetMask s : universe) {
    if (popcount(s) + 2 >= static_cast<int>(d)) large.push_back(s);
    if (popcount(s) <= 1) small.push_back(s);
  }
  r.expected = {large, small};
  std::sort(r.expected.begin(), r.expected.end());
  r.expected.erase(std::unique(r.expected.begin(), r.expected.end()), r.expected.end());
  r.matches = r.families == r.expected;
  return r;
}

}  // namespace bsp
