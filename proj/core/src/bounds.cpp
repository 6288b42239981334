#include "bsp/bounds.hpp"

#include <algorithm>

#include "bsp/errors.hpp"
#include "bsp/examples.hpp"
#include "bsp/product_matrix.hpp"

namespace bsp {

namespace {

std::int64_t pow2(std::size_t e) {
  if (e > 56) throw BadParameter("dimension too large for exact 64-bit bounds");
  return std::int64_t{1} << e;
}

BoundReport finish(std::string name, std::int64_t lhs, std::int64_t rhs, bool applicable) {
  BoundReport r{std::move(name), lhs, rhs, applicable, true, false};
  if (applicable) {
    r.pass = lhs <= rhs;
    r.equality = lhs == rhs;
  }
  return r;
}

}  // namespace

BoundReport check_thm4(std::size_t d, std::int64_t size_a, std::int64_t size_b) {
  const auto rhs = static_cast<std::int64_t>(d + 1) * pow2(d);
  return finish("thm4", size_a * size_b, rhs, true);
}

BoundReport check_thm4(const BspPair& p) {
  return check_thm4(p.dim, static_cast<std::int64_t>(p.a.size()), static_cast<std::int64_t>(p.b.size()));
}

BoundReport check_thm3(std::size_t d, std::int64_t size_a, std::int64_t size_b) {
  const auto sd = static_cast<std::int64_t>(d);
  const bool applicable = size_a >= sd + 2 && size_b >= sd + 2;
  return finish("thm3", size_a * size_b, sd * pow2(d) + 2 * sd, applicable);
}

BoundReport check_thm3(const BspPair& p) {
  return check_thm3(p.dim, static_cast<std::int64_t>(p.a.size()), static_cast<std::int64_t>(p.b.size()));
}

EqualityClassification check_thm6_equality(const BspPair& p) {
  EqualityClassification out;
  const auto thm4 = check_thm4(p);
  if (!thm4.equality) return out;
  out.equality_case = true;
  out.consistent = false;

  const std::size_t d = p.dim;
  const auto cube = static_cast<std::size_t>(pow2(d));
  const auto m = product_matrix(p);
  const auto reference = canonical_key(product_matrix(construct_example(ExampleKind::cube_pair, d)), true);
  if (canonical_key(m, true) != reference) return out;
  if (p.a.size() == cube && p.b.size() == d + 1) {
    out.cube_side = CubeSide::a;
  } else if (p.b.size() == cube && p.a.size() == d + 1) {
    out.cube_side = CubeSide::b;
  }
  // d = 1 has |A| = |B| = 2 = d+1 = 2^d; the first branch above names A.
  out.consistent = out.cube_side != CubeSide::none;
  return out;
}

std::int64_t conjecture1_threshold_times_two(std::size_t d, int k) {
  return pow2(static_cast<std::size_t>(k)) * (static_cast<std::int64_t>(d) - k + 2);
}

std::int64_t conjecture1_bound(std::size_t d, int k) {
  return (pow2(d - static_cast<std::size_t>(k)) + k) * pow2(static_cast<std::size_t>(k)) *
         (static_cast<std::int64_t>(d) - k + 1);
}

ConjectureReport check_conjecture1(const std::vector<std::pair<std::int64_t, std::int64_t>>& sizes,
                                   std::size_t d) {
  ConjectureReport rep;
  rep.d = d;
  for (const auto& [m, n] : sizes) {
    ++rep.pairs_checked;
    const std::int64_t lo = std::min(m, n);
    for (int k = 0; k <= static_cast<int>(d); ++k) {
      if (2 * lo <= conjecture1_threshold_times_two(d, k)) continue;
      ++rep.implications_tested;
      const std::int64_t bound = conjecture1_bound(d, k);
      if (m * n > bound) rep.violations.push_back({m, n, k, m * n, bound});
    }
  }
  return rep;
}

}  // namespace bsp
