#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bsp/bounds.hpp"
#include "bsp/family.hpp"
#include "bsp/product_matrix.hpp"

namespace bsp {

/// Facet inequality <normal, x> <= offset. The normal is a primitive integer
/// vector when the vertices are integral; rational inputs are scaled first.
struct Facet {
  QVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

enum class FacetMethod {
  automatic,           ///< subsets when there are few of them, else double description
  subsets,             ///< every hyperplane through d vertices
  double_description,  ///< incremental extreme rays of the polar cone
};

/// Sorted facet list of conv(points). Duplicate points are ignored. Throws
/// NotFullDimensional when the points do not affinely span, BadParameter when
/// some point is not a vertex, ArithmeticOverflow if coordinates get too large.
std::vector<Facet> facets(const std::vector<QVector>& points, FacetMethod method = FacetMethod::automatic);

struct Polytope2L {
  std::size_t d = 0;
  std::vector<QVector> vertices;  ///< sorted
  std::vector<Facet> facets;      ///< sorted
  bool two_level = false;
  /// vertices x facets; 0 on the facet, 1 on the parallel level. Empty unless two_level.
  ProductMatrix slack;
};

/// Computes facets, 2-levelness and the slack matrix.
Polytope2L make_polytope(const std::vector<QVector>& points, FacetMethod method = FacetMethod::automatic);

/// Each facet normal takes exactly two values on the vertices.
bool is_two_level(const Polytope2L& p);

/// Vertices translated so that 0 is a vertex (by the first vertex unless 0 is
/// already one), with B = {0} and one scaled normal per pair of parallel
/// facets. Throws NotTwoLevel.
BspPair extract_pair(const Polytope2L& p);

/// f0 f_{d-1} <= d 2^(d+1).
BoundReport check_thm1(const Polytope2L& p);
/// f0 f_{d-1} <= (d-1) 2^(d+1) + 8(d-1), applicable for d > 1 when the
/// polytope is neither a cube nor a cross-polytope. Throws NotTwoLevel.
BoundReport check_thm2(const Polytope2L& p);

enum class Special { cube, cross, neither };
std::string_view to_string(Special s);

/// Compares the slack matrix with the cube's and the cross-polytope's up to
/// row and column permutations. In d <= 2 both coincide and cube is reported.
/// Throws NotTwoLevel.
Special detect_special(const Polytope2L& p);

/// m equals reference_cube_slack(d) up to row and column permutations. The
/// cross-polytope's slack is the transpose of the cube's.
bool is_cube_slack(const ProductMatrix& m, std::size_t d);

/// Slack matrices built combinatorially (vertices x facets).
ProductMatrix reference_cube_slack(std::size_t d);
ProductMatrix reference_cross_slack(std::size_t d);

enum class PolytopeKind { suspension_cube, cross_x_segment, cube, cross, simplex, prism };
/// "suspension-cube", "cross-x-segment", "cube", "cross", "simplex", "prism". Throws BadParameter.
PolytopeKind parse_polytope_kind(std::string_view name);
std::string_view to_string(PolytopeKind k);

/// Vertex sets:
///  - suspension_cube: {+-1}^(d-1) x {0} together with +-e_d (d >= 2)
///  - cross_x_segment: eps_i e_i + eps_d e_d for i < d (d >= 2)
///  - cube: {0,1}^d; cross: +-e_i; simplex: 0, e_1, ..., e_d
///  - prism: (d-1)-simplex x [0,1] (d >= 2)
/// Throws BadParameter for d outside the supported range (d <= 12).
std::vector<QVector> polytope_vertices(PolytopeKind kind, std::size_t d);
Polytope2L construct_polytope(PolytopeKind kind, std::size_t d);

struct Lemma3Certificate {
  bool pass = false;
  QMatrix map;                 ///< the linear map, applied as map * x
  std::vector<QVector> image;  ///< map(P) - e_d, sorted
};

/// Builds P from a_1..a_{d-1}, v (the d input vectors, v last) with
/// s = v + sum a_i, and checks that the linear map sending a_i to e_d + e_i and
/// s to 2 e_d, followed by translation by -e_d, carries the vertices of P onto
/// {+-e_i}. Throws SingularBasis.
Lemma3Certificate verify_lemma3(const std::vector<QVector>& basis);

/// d linearly independent vectors with entries p/q, |p| <= 5, 1 <= q <= 4,
/// drawn from a generator seeded with `seed`.
std::vector<QVector> random_rational_basis(std::size_t d, std::uint64_t seed);

/// Sizes a 2-level slack matrix yields for the pair construction:
/// (vertices, parallel facet classes + 1) and the dimension rank - 1.
struct SlackSizes {
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  std::size_t d = 0;
};
/// Throws MalformedSlack if a facet column has no zero or no one, if two
/// columns coincide, or if the matrix has rank < 2.
SlackSizes slack_sizes(const ProductMatrix& slack);

/// check_conjecture1 over slack_sizes of each matrix; every matrix must have
/// dimension d. Throws MalformedSlack.
ConjectureReport audit_conjecture_on_slacks(const std::vector<ProductMatrix>& slacks, std::size_t d);

}  // namespace bsp
