#include <random>
#include <sstream>

#include "bsp/closure.hpp"
#include "bsp/errors.hpp"
#include "bsp/examples.hpp"
#include "bsp/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsp;

namespace {

// Random spanning subsets of {0,1}^d, with a few half-integral vectors mixed in.
VectorFamily random_spanning(std::mt19937_64& rng, std::size_t d, bool rational) {
  for (;;) {
    std::vector<QVector> vs;
    for (unsigned m = 0; m < (1u << d); ++m)
      if (rng() % 3 == 0) vs.push_back(QVector::from_mask(d, m));
    if (rational && rng() % 2) {
      QVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = Rational(static_cast<long>(rng() % 3) - 1, 2);
      vs.push_back(v);
    }
    VectorFamily f(d, vs);
    if (f.spans()) return f;
  }
}

}  // namespace

TEST_CASE("families are sorted and deduplicated") {
  VectorFamily f(2, {{1, 0}, {0, 1}, {1, 0}});
  CHECK(f.size() == 2);
  CHECK(f[0] == QVector{0, 1});
  CHECK(f.contains(QVector{1, 0}));
  CHECK(f.spans());
  CHECK_THROWS_AS(VectorFamily(2, {{1, 0, 0}}), DimensionMismatch);
  CHECK(VectorFamily(3, {{1, 1, 0}, {2, 2, 0}}).rank() == 1);
}

TEST_CASE("binary product check reports a witness") {
  VectorFamily a(2, {{1, 0}, {1, 1}});
  VectorFamily b(2, {{0, 1}, {1, 1}});
  const auto r = verify_binary_products(a, b);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->value == Rational(2));
  CHECK(r.witness->a == QVector{1, 1});
  CHECK(verify_binary_products(VectorFamily(2, {{1, 0}}), VectorFamily(2, {{0, 1}, {1, 0}})).ok);
  CHECK_THROWS_AS(verify_binary_products(VectorFamily(2, {{1, 0}}), VectorFamily(3, {{1, 0, 0}})),
                  DimensionMismatch);
}

TEST_CASE("pair validation") {
  BspPair ok{2, VectorFamily(2, {{0, 0}, {1, 0}, {0, 1}}), VectorFamily(2, {{1, 0}, {0, 1}})};
  CHECK(is_valid_pair(ok));
  BspPair flat{2, VectorFamily(2, {{1, 0}, {0, 0}}), VectorFamily(2, {{1, 0}, {0, 1}})};
  CHECK_THROWS_AS(require_valid_pair(flat), NotSpanning);
  BspPair bad{2, VectorFamily(2, {{1, 1}, {1, 0}}), VectorFamily(2, {{1, 1}, {0, 1}})};
  CHECK_THROWS_AS(require_valid_pair(bad), BadParameter);
  CHECK_FALSE(is_valid_pair(bad));
}

TEST_CASE("a_max equals the set of all binary partners") {
  std::mt19937_64 rng(21);
  for (std::size_t d = 1; d <= 3; ++d)
    for (int t = 0; t < 25; ++t) {
      const auto b = random_spanning(rng, d, t % 2 == 1);
      const auto a = a_max(b);
      const auto want = oracle::binary_partners(b.vectors());
      CHECK(std::set<QVector>(a.begin(), a.end()) == want);
      CHECK(a.contains(QVector::zero(d)));
      CHECK(a.size() <= (std::size_t{1} << d));
    }
  CHECK_THROWS_AS(a_max(VectorFamily(2, {{1, 1}})), NotSpanning);
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  std::mt19937_64 rng(22);
  for (std::size_t d = 2; d <= 4; ++d)
    for (int t = 0; t < 15; ++t) {
      const auto b = random_spanning(rng, d, false);
      const auto c = closure(b);
      CHECK(b.is_subset_of(c));
      CHECK(closure(c) == c);
      std::vector<QVector> more = b.vectors();
      for (const auto& v : c) {
        more.push_back(v);
        break;
      }
      CHECK(c.is_subset_of(closure(VectorFamily(d, more))));
      const auto p = close_pair(BspPair{d, a_max(b), b});
      CHECK(is_closed_pair(p));
      CHECK(is_valid_pair(p));
    }
}

TEST_CASE("cube pair is closed") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto p = construct_example(ExampleKind::cube_pair, d);
    CHECK(is_closed_pair(p));
    CHECK(p.a.size() == (std::size_t{1} << d));
    CHECK(p.b.size() == d + 1);
  }
}

TEST_CASE("JSON round trip") {
  const auto p = construct_example(ExampleKind::example4, 3);
  const Json j = to_json(p);
  CHECK(pair_from_json(j) == p);
  std::istringstream in(j.dump());
  CHECK(pair_from_json(read_json(in)) == p);
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(-4)) == Rational(-4));
  const auto m = ProductMatrix::from_bit_rows({"101", "010"});
  CHECK(matrix_from_json(to_json(m)) == m);

  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"d": 2, "a": {"d": 2, "vectors": [[1]]}})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"d": 2, "vectors": [[1, 2, 3]]})")), DimensionMismatch);
  CHECK_THROWS_AS(rational_from_json(Json("a/b")), ParseError);
  std::istringstream broken("{\"d\": ");
  CHECK_THROWS_AS(read_json(broken), ParseError);
}
