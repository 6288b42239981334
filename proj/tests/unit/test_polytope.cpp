#include <algorithm>
#include <numeric>
#include <random>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"
#include "bsp/polytope.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsp;

namespace {

std::set<oracle::FacetRow> as_rows(const std::vector<Facet>& fs) {
  std::set<oracle::FacetRow> out;
  for (const auto& f : fs) out.insert(oracle::scale_facet({f.normal.begin(), f.normal.end()}, f.offset));
  return out;
}

// Random full-dimensional subsets of {0,1}^d; every point is a vertex.
std::vector<QVector> random_cube_subset(std::mt19937_64& rng, std::size_t d) {
  for (;;) {
    std::vector<QVector> pts;
    for (unsigned m = 0; m < (1u << d); ++m)
      if (rng() % 2) pts.push_back(QVector::from_mask(d, m));
    if (pts.size() > d && affine_dim(pts) == static_cast<int>(d)) return pts;
  }
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

std::int64_t p2(std::size_t k) { return std::int64_t{1} << k; }

}  // namespace

TEST_CASE("facets of the square") {
  const auto fs = facets({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  REQUIRE(fs.size() == 4);
  CHECK(fs[0] == Facet{{-1, 0}, Rational(0)});
  CHECK(std::find(fs.begin(), fs.end(), Facet{{1, 0}, Rational(1)}) != fs.end());
}

TEST_CASE("facets agree with the subset oracle") {
  std::mt19937_64 rng(41);
  for (std::size_t d = 2; d <= 4; ++d)
    for (int t = 0; t < 12; ++t) {
      auto pts = random_cube_subset(rng, d);
      // A rational affine image keeps the combinatorics.
      for (auto& p : pts) p = p * Rational(2, 3) + QVector(std::vector<Rational>(d, Rational(-1, 2)));
      const auto want = oracle::facets_by_subsets(pts);
      CHECK(as_rows(facets(pts, FacetMethod::subsets)) == want);
      CHECK(as_rows(facets(pts, FacetMethod::double_description)) == want);
    }
  for (auto kind : {PolytopeKind::suspension_cube, PolytopeKind::cross_x_segment, PolytopeKind::cross,
                    PolytopeKind::prism, PolytopeKind::simplex}) {
    const auto pts = polytope_vertices(kind, 3);
    CHECK(as_rows(facets(pts)) == oracle::facets_by_subsets(pts));
  }
}

TEST_CASE("facet methods agree in dimension 5") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5; ++t) {
    const auto pts = random_cube_subset(rng, 5);
    CHECK(facets(pts, FacetMethod::subsets) == facets(pts, FacetMethod::double_description));
  }
  const auto pts = polytope_vertices(PolytopeKind::suspension_cube, 5);
  CHECK(facets(pts, FacetMethod::subsets) == facets(pts, FacetMethod::double_description));
}

TEST_CASE("facet input errors") {
  CHECK_THROWS_AS(facets({{0, 0}, {1, 1}, {2, 2}}), NotFullDimensional);
  CHECK_THROWS_AS(facets({{0, 0}, {2, 0}, {0, 2}, {1, 0}}), BadParameter);
  CHECK_THROWS_AS(facets({{0, 0}, {2, 0}, {0, 2}, {1, 0}}, FacetMethod::double_description), BadParameter);
  CHECK(facets({{0, 0}, {1, 0}, {0, 1}, {0, 1}}).size() == 3);
}

TEST_CASE("constructed polytopes") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto s = construct_polytope(PolytopeKind::suspension_cube, d);
    const auto c = construct_polytope(PolytopeKind::cross_x_segment, d);
    CHECK(s.two_level);
    CHECK(c.two_level);
    CHECK(static_cast<std::int64_t>(s.vertices.size()) == 2 + p2(d - 1));
    CHECK(s.facets.size() == 4 * (d - 1));
    CHECK(c.vertices.size() == 4 * (d - 1));
    CHECK(static_cast<std::int64_t>(c.facets.size()) == 2 + p2(d - 1));
    CHECK(canonical_key(s.slack, false) == canonical_key(c.slack.transpose(), false));

    const auto thm2 = check_thm2(s);
    CHECK(thm2.lhs == thm2.rhs);
    CHECK(thm2.applicable == (d >= 4));
    if (d >= 4) CHECK(thm2.equality);
    CHECK(check_thm2(c).lhs == thm2.rhs);

    for (auto kind : {PolytopeKind::simplex, PolytopeKind::prism}) {
      const auto p = construct_polytope(kind, d);
      CHECK(p.two_level);
      if (kind == PolytopeKind::simplex || d > 2) CHECK(detect_special(p) == Special::neither);
      CHECK(check_thm1(p).pass);
    }
  }
  CHECK(detect_special(construct_polytope(PolytopeKind::prism, 2)) == Special::cube);
  CHECK(detect_special(construct_polytope(PolytopeKind::suspension_cube, 3)) == Special::cross);
}

TEST_CASE("cube and cross-polytope") {
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto cube = construct_polytope(PolytopeKind::cube, d);
    const auto cross = construct_polytope(PolytopeKind::cross, d);
    CHECK(detect_special(cube) == Special::cube);
    CHECK(detect_special(cross) == (d <= 2 ? Special::cube : Special::cross));
    CHECK(check_thm1(cube).rhs == static_cast<std::int64_t>(d) * p2(d + 1));
    CHECK(check_thm1(cube).equality);
    CHECK(check_thm1(cross).equality);
    CHECK(canonical_key(cube.slack, false) == canonical_key(oracle::cube_slack(d), false));
    CHECK(canonical_key(cross.slack, false) == canonical_key(oracle::cross_slack(d), false));
    if (d <= 3) {
      CHECK(oracle::equivalent_by_search(cube.slack, oracle::cube_slack(d), false));
      CHECK(oracle::equivalent_by_search(cross.slack, oracle::cross_slack(d), false));
    }
  }
}

TEST_CASE("structural cube test") {
  std::mt19937_64 rng(43);
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto ref = oracle::cube_slack(d);
    CHECK(is_cube_slack(shuffle(rng, ref), d));
    CHECK(reference_cube_slack(d).rows() == static_cast<std::size_t>(p2(d)));
    CHECK(canonical_key(reference_cross_slack(d), false) == canonical_key(ref.transpose(), false));
    if (d < 2) continue;
    auto broken = ref;
    broken.set(0, 0, !broken.at(0, 0));
    CHECK_FALSE(is_cube_slack(broken, d));
    CHECK_FALSE(is_cube_slack(ref, d - 1));
  }
}

TEST_CASE("2-levelness") {
  std::vector<QVector> pts;
  for (unsigned m = 1; m < 8; ++m) pts.push_back(QVector::from_mask(3, m));
  const auto p = make_polytope(pts);
  CHECK_FALSE(p.two_level);
  CHECK_FALSE(is_two_level(p));
  CHECK(p.slack.rows() == 0);
  CHECK_THROWS_AS(extract_pair(p), NotTwoLevel);
  CHECK_THROWS_AS(check_thm2(p), NotTwoLevel);
  CHECK_THROWS_AS(detect_special(p), NotTwoLevel);
}

TEST_CASE("pairs from 2-level polytopes") {
  for (std::size_t d = 2; d <= 5; ++d)
    for (auto kind : {PolytopeKind::suspension_cube, PolytopeKind::cross_x_segment, PolytopeKind::cube,
                      PolytopeKind::cross, PolytopeKind::simplex, PolytopeKind::prism}) {
      const auto p = construct_polytope(kind, d);
      const auto pair = extract_pair(p);
      CHECK(is_valid_pair(pair));
      CHECK(pair.a.size() == p.vertices.size());
      const auto sizes = slack_sizes(p.slack);
      CHECK(sizes.d == d);
      CHECK(sizes.size_a == static_cast<std::int64_t>(pair.a.size()));
      CHECK(sizes.size_b == static_cast<std::int64_t>(pair.b.size()));
    }
  const auto tri = extract_pair(make_polytope({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(tri.b == VectorFamily(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("slack sizes") {
  const auto s = slack_sizes(oracle::cube_slack(4));
  CHECK(s.size_a == 16);
  CHECK(s.size_b == 5);
  CHECK(s.d == 4);
  CHECK_THROWS_AS(slack_sizes(ProductMatrix::from_bit_rows({"10", "11"})), MalformedSlack);
  CHECK_THROWS_AS(slack_sizes(ProductMatrix::from_bit_rows({"1100", "0011", "1100"})), MalformedSlack);
  CHECK_THROWS_AS(slack_sizes(ProductMatrix::from_bit_rows({"1", "0"})), MalformedSlack);
  CHECK_THROWS_AS(audit_conjecture_on_slacks({oracle::cube_slack(3)}, 4), MalformedSlack);
  CHECK(audit_conjecture_on_slacks({oracle::cube_slack(3), oracle::cross_slack(3)}, 3).pass());
}

TEST_CASE("affine map onto the cross-polytope") {
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto basis = random_rational_basis(d, seed);
      CHECK(rank(basis) == d);
      const auto cert = verify_lemma3(basis);
      CHECK(cert.pass);
      CHECK(cert.image.size() == 2 * d);
    }
  CHECK(random_rational_basis(4, 9) == random_rational_basis(4, 9));
  CHECK_THROWS_AS(verify_lemma3({{1, 0}, {2, 0}}), SingularBasis);
  CHECK_THROWS_AS(verify_lemma3({{1, 0}}), DimensionMismatch);
}

TEST_CASE("polytope kinds") {
  CHECK(parse_polytope_kind("cross-x-segment") == PolytopeKind::cross_x_segment);
  CHECK(to_string(PolytopeKind::suspension_cube) == "suspension-cube");
  CHECK(to_string(Special::cross) == "cross");
  CHECK_THROWS_AS(parse_polytope_kind("sphere"), BadParameter);
  CHECK_THROWS_AS(polytope_vertices(PolytopeKind::prism, 1), BadParameter);
  CHECK_THROWS_AS(polytope_vertices(PolytopeKind::cube, 13), BadParameter);
}
