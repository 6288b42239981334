#include <algorithm>
#include <numeric>
#include <random>

#include "bsp/errors.hpp"
#include "bsp/examples.hpp"
#include "bsp/product_matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsp;

namespace {

ProductMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density) {
  ProductMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 100 < density);
  return m;
}

ProductMatrix shuffle(std::mt19937_64& rng, const ProductMatrix& m) {
  std::vector<std::size_t> rp(m.rows()), cp(m.cols());
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  ProductMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(rp[r], cp[c], m.at(r, c));
  return out;
}

}  // namespace

TEST_CASE("bit rows, transpose and rank") {
  const auto m = ProductMatrix::from_bit_rows({"110", "011", "101"});
  CHECK(m.bit_rows() == std::vector<std::string>{"110", "011", "101"});
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose().at(2, 1));
  CHECK(m.rank() == 3);
  CHECK(ProductMatrix::from_bit_rows({"11", "11"}).rank() == 1);
  CHECK_FALSE(ProductMatrix::from_bit_rows({"11", "11"}).rows_distinct());
  CHECK_THROWS_AS(ProductMatrix::from_bit_rows({"10", "1"}), ParseError);
  CHECK_THROWS_AS(ProductMatrix::from_bit_rows({"12"}), ParseError);
}

TEST_CASE("product matrix of a pair") {
  const auto p = construct_example(ExampleKind::cube_pair, 3);
  const auto m = product_matrix(p);
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 4);
  CHECK(m.rank() == 3);
  BspPair bad{1, VectorFamily(1, {{2}}), VectorFamily(1, {{1}})};
  CHECK_THROWS_AS(product_matrix(bad), BadParameter);
}

TEST_CASE("keys are invariant under row and column permutations") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9, 20 + static_cast<unsigned>(rng() % 60));
    const auto s = shuffle(rng, m);
    CHECK(canonical_key(m, false) == canonical_key(s, false));
    CHECK(canonical_key(m, true) == canonical_key(s.transpose(), true));
    CHECK(decode_key(canonical_key(m, false)) == canonical_form(m, false));
    CHECK(oracle::equivalent_by_search(m, canonical_form(m, false), false));
  }
}

TEST_CASE("equal keys exactly when a permutation search finds a match") {
  std::mt19937_64 rng(32);
  int equal = 0, different = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
    const auto x = random_matrix(rng, r, c, 50);
    const auto y = t % 2 ? shuffle(rng, x) : random_matrix(rng, r, c, 50);
    for (bool tr : {false, true}) {
      const bool keys = canonical_key(x, tr) == canonical_key(y, tr);
      CHECK(keys == oracle::equivalent_by_search(x, y, tr));
      (keys ? equal : different)++;
    }
  }
  CHECK(equal > 100);
  CHECK(different > 100);
}

TEST_CASE("highly symmetric matrices") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto cube = oracle::cube_slack(d);
    const auto cross = oracle::cross_slack(d);
    CHECK(canonical_key(cube, true) == canonical_key(cross, true));
    CHECK(canonical_key(cube, false) == canonical_key(cross.transpose(), false));
    if (d <= 3) CHECK(oracle::equivalent_by_search(cube, cross, true));
  }
  ProductMatrix id(12, 12), anti(12, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    id.set(i, i, true);
    anti.set(i, 11 - i, true);
  }
  CHECK(canonical_key(id, false) == canonical_key(anti, false));
}

TEST_CASE("wide matrices and key layout") {
  const auto m = product_matrix(construct_example(ExampleKind::example4, 8));
  CHECK(m.rows() == 129);
  const auto key = canonical_key(m, true);
  const auto form = decode_key(key);
  CHECK(form.rows() >= form.cols());
  CHECK(form.rows() == 129);
  CHECK(key.bytes[4] == 0);
  CHECK(CanonicalKey::from_hex(key.hex()) == key);

  ProductMatrix tall(3, 2), wide(2, 3);
  CHECK(canonical_form(wide, true).rows() == 3);
  CHECK(canonical_key(tall, true) == canonical_key(wide, true));
  CHECK(canonical_key(tall, false) != canonical_key(wide, false));
}

TEST_CASE("malformed keys are rejected") {
  CanonicalKey k = canonical_key(ProductMatrix::from_bit_rows({"10", "01"}), false);
  CanonicalKey shorter = k;
  shorter.bytes.pop_back();
  CHECK_THROWS_AS(decode_key(shorter), ParseError);
  CanonicalKey format = k;
  format.bytes[4] = 9;
  CHECK_THROWS_AS(decode_key(format), ParseError);
  CHECK_THROWS_AS(CanonicalKey::from_hex("0g"), ParseError);
  CHECK_THROWS_AS(CanonicalKey::from_hex("abc"), ParseError);
}

TEST_CASE("factorize realizes the product table") {
  for (std::size_t d = 1; d <= 5; ++d)
    for (auto kind : {ExampleKind::cube_pair, ExampleKind::example3, ExampleKind::example4}) {
      const auto m = product_matrix(construct_example(kind, d));
      const auto p = factorize(m);
      CHECK(p.dim == m.rank());
      CHECK(is_valid_pair(p));
      CHECK(canonical_key(product_matrix(p), false) == canonical_key(m, false));
    }
  CHECK_THROWS_AS(factorize(ProductMatrix(2, 2)), NotSpanning);
}
