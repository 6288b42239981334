#include "bsp/bounds.hpp"
#include "bsp/errors.hpp"
#include "bsp/examples.hpp"
#include "bsp/product_matrix.hpp"
#include "doctest.h"

using namespace bsp;

namespace {

std::int64_t p2(std::size_t k) { return std::int64_t{1} << k; }

BspPair swapped(const BspPair& p) { return {p.dim, p.b, p.a}; }

bool zero_one_entries(const VectorFamily& f) {
  for (const auto& v : f)
    for (const auto& x : v)
      if (!(x.is_zero() || x.is_one())) return false;
  return true;
}

}  // namespace

TEST_CASE("example sizes follow their closed forms") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const auto cube = construct_example(ExampleKind::cube_pair, d);
    CHECK(cube.a.size() == static_cast<std::size_t>(p2(d)));
    CHECK(cube.b.size() == d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
      const auto e = construct_example(ExampleKind::example5, d, k);
      CHECK(static_cast<std::int64_t>(e.a.size()) == p2(d - k) + static_cast<std::int64_t>(k));
      CHECK(static_cast<std::int64_t>(e.b.size()) == p2(k) * static_cast<std::int64_t>(d - k + 1));
      if (d <= 7) CHECK(is_valid_pair(e));
    }
    CHECK(construct_example(ExampleKind::example5, d, 0) == cube);
    if (d < 2) continue;
    for (auto kind : {ExampleKind::example3, ExampleKind::example4}) {
      const auto e = construct_example(kind, d);
      CHECK(static_cast<std::int64_t>(e.a.size()) == p2(d - 1) + 1);
      CHECK(e.b.size() == 2 * d);
      CHECK(is_valid_pair(e));
    }
  }
}

TEST_CASE("example 3 lives in the cube, example 4 does not") {
  for (std::size_t d = 3; d <= 10; ++d) {
    const auto e3 = construct_example(ExampleKind::example3, d);
    const auto e4 = construct_example(ExampleKind::example4, d);
    CHECK(zero_one_entries(e3.a));
    CHECK(zero_one_entries(e3.b));
    CHECK_FALSE((zero_one_entries(e4.a) && zero_one_entries(e4.b)));
    CHECK(canonical_key(product_matrix(e3), true) != canonical_key(product_matrix(e4), true));
  }
  for (std::size_t d = 1; d <= 2; ++d)
    CHECK(canonical_key(product_matrix(construct_example(ExampleKind::example3, d)), true) ==
          canonical_key(product_matrix(construct_example(ExampleKind::example4, d)), true));
}

TEST_CASE("example parameters") {
  CHECK(parse_example_kind("example4") == ExampleKind::example4);
  CHECK(to_string(ExampleKind::cube_pair) == "cube-pair");
  CHECK_THROWS_AS(parse_example_kind("example9"), BadParameter);
  CHECK_THROWS_AS(construct_example(ExampleKind::cube_pair, 0), BadParameter);
  CHECK_THROWS_AS(construct_example(ExampleKind::cube_pair, 21), BadParameter);
  CHECK_THROWS_AS(construct_example(ExampleKind::example5, 4), BadParameter);
  CHECK_THROWS_AS(construct_example(ExampleKind::example5, 4, 5), BadParameter);
}

TEST_CASE("product bounds") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const auto r = check_thm4(d, p2(d), static_cast<std::int64_t>(d + 1));
    CHECK(r.rhs == static_cast<std::int64_t>(d + 1) * p2(d));
    CHECK(r.equality);
    CHECK(r.pass);
    CHECK_FALSE(check_thm4(d, p2(d), static_cast<std::int64_t>(d + 2)).pass);
  }
  const auto small = check_thm3(4, 5, 16);
  CHECK_FALSE(small.applicable);
  CHECK(small.pass);
  const auto big = check_thm3(4, 6, 12);
  CHECK(big.applicable);
  CHECK(big.rhs == 4 * 16 + 8);
  CHECK(big.equality);
  CHECK_FALSE(check_thm3(4, 7, 11).pass);
  for (std::size_t d = 3; d <= 10; ++d)
    for (auto kind : {ExampleKind::example3, ExampleKind::example4}) {
      const auto r = check_thm3(construct_example(kind, d));
      CHECK(r.applicable);
      CHECK(r.equality);
    }
}

TEST_CASE("equality cases of the (d+1) 2^d bound") {
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto p = construct_example(ExampleKind::cube_pair, d);
    const auto c = check_thm6_equality(p);
    CHECK(c.equality_case);
    CHECK(c.consistent);
    CHECK(c.cube_side == CubeSide::a);
    if (d > 1) CHECK(check_thm6_equality(swapped(p)).cube_side == CubeSide::b);
  }
  const auto e = check_thm6_equality(construct_example(ExampleKind::example3, 4));
  CHECK_FALSE(e.equality_case);
  CHECK(e.consistent);
}

TEST_CASE("conjectured bound") {
  CHECK(conjecture1_bound(4, 0) == 80);
  CHECK(conjecture1_bound(4, 1) == 9 * 2 * 4);
  CHECK(conjecture1_bound(5, 5) == 6 * 32);
  CHECK(conjecture1_threshold_times_two(4, 0) == 6);
  CHECK(conjecture1_threshold_times_two(5, 2) == 20);
  for (std::size_t d = 2; d <= 8; ++d)
    for (std::size_t k = 0; k <= d; ++k) {
      const auto e = construct_example(ExampleKind::example5, d, k);
      const auto r = check_conjecture1({{static_cast<std::int64_t>(e.a.size()), static_cast<std::int64_t>(e.b.size())}}, d);
      CHECK(r.pass());
    }
  const auto bad = check_conjecture1({{17, 11}}, 5);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violations.front().product == 187);
  CHECK(bad.violations.front().k == 1);
  const auto none = check_conjecture1({{3, 100}}, 4);
  CHECK(none.implications_tested == 0);
}
