#include "bsp/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"

namespace bsp {

namespace {

constexpr std::size_t kMaxConstructDim = 12;

std::int64_t pow2(std::size_t e) {
  if (e > 56) throw BadParameter("dimension too large for exact 64-bit bounds");
  return std::int64_t{1} << e;
}

// Distinct values of <normal, v> over the vertices, ascending.
std::vector<Rational> levels(const Facet& f, const std::vector<QVector>& vertices) {
  std::set<Rational> vals;
  for (const auto& v : vertices) vals.insert(dot(f.normal, v));
  return {vals.begin(), vals.end()};
}

void require_two_level(const Polytope2L& p) {
  if (!p.two_level) throw NotTwoLevel("polytope is not 2-level");
}

std::vector<std::vector<Rational>> sign_vectors(std::size_t n) {
  std::vector<std::vector<Rational>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i) & 1 ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Polytope2L make_polytope(const std::vector<QVector>& points, FacetMethod method) {
  Polytope2L p;
  p.facets = facets(points, method);
  p.d = points.front().dim();
  p.vertices = points;
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  p.two_level = is_two_level(p);
  if (!p.two_level) return p;

  p.slack = ProductMatrix(p.vertices.size(), p.facets.size());
  for (std::size_t c = 0; c < p.facets.size(); ++c) {
    const auto& f = p.facets[c];
    for (std::size_t r = 0; r < p.vertices.size(); ++r) p.slack.set(r, c, dot(f.normal, p.vertices[r]) != f.offset);
  }
  return p;
}

bool is_two_level(const Polytope2L& p) {
  return std::all_of(p.facets.begin(), p.facets.end(),
                     [&](const Facet& f) { return levels(f, p.vertices).size() == 2; });
}

BspPair extract_pair(const Polytope2L& p) {
  require_two_level(p);
  const QVector origin = QVector::zero(p.d);
  const bool has_origin = std::binary_search(p.vertices.begin(), p.vertices.end(), origin);
  const QVector shift = has_origin ? origin : p.vertices.front();

  std::vector<QVector> a;
  for (const auto& v : p.vertices) a.push_back(v - shift);
  std::vector<QVector> b{origin};
  for (const auto& f : p.facets) {
    // After the shift one level is 0; scale so that the other becomes 1.
    const auto lv = levels(f, a);
    const Rational other = lv[0].is_zero() ? lv[1] : lv[0];
    b.push_back(f.normal * (Rational(1) / other));
  }
  BspPair out{p.d, VectorFamily(p.d, std::move(a)), VectorFamily(p.d, std::move(b))};
  return out;
}

BoundReport check_thm1(const Polytope2L& p) {
  BoundReport r;
  r.name = "thm1";
  r.lhs = static_cast<std::int64_t>(p.vertices.size() * p.facets.size());
  r.rhs = static_cast<std::int64_t>(p.d) * pow2(p.d + 1);
  r.pass = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

BoundReport check_thm2(const Polytope2L& p) {
  require_two_level(p);
  BoundReport r;
  r.name = "thm2";
  r.lhs = static_cast<std::int64_t>(p.vertices.size() * p.facets.size());
  const auto dm1 = static_cast<std::int64_t>(p.d) - 1;
  r.rhs = dm1 * pow2(p.d + 1) + 8 * dm1;
  r.applicable = p.d > 1 && detect_special(p) == Special::neither;
  if (r.applicable) {
    r.pass = r.lhs <= r.rhs;
    r.equality = r.lhs == r.rhs;
  }
  return r;
}

std::string_view to_string(Special s) {
  switch (s) {
    case Special::cube: return "cube";
    case Special::cross: return "cross";
    case Special::neither: return "neither";
  }
  return "neither";
}

ProductMatrix reference_cube_slack(std::size_t d) {
  if (d == 0 || d > kMaxConstructDim) throw BadParameter("cube slack needs 1 <= d <= 12");
  const std::size_t n = std::size_t{1} << d;
  ProductMatrix m(n, 2 * d);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) {
      const bool bit = (v >> i) & 1;
      m.set(v, 2 * i, bit);
      m.set(v, 2 * i + 1, !bit);
    }
  return m;
}

ProductMatrix reference_cross_slack(std::size_t d) {
  if (d == 0 || d > kMaxConstructDim) throw BadParameter("cross slack needs 1 <= d <= 12");
  const std::size_t n = std::size_t{1} << d;
  ProductMatrix m(2 * d, n);
  // Vertex +-e_i lies on the facet with sign vector s iff s_i has its sign.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      const bool negative = (s >> i) & 1;
      m.set(2 * i, s, negative);
      m.set(2 * i + 1, s, !negative);
    }
  return m;
}

bool is_cube_slack(const ProductMatrix& m, std::size_t d) {
  if (d == 0 || d > 30 || m.rows() != (std::size_t{1} << d) || m.cols() != 2 * d) return false;
  // Columns must split into complementary pairs, and the rows restricted to
  // one column of each pair must realize every 0/1 pattern once.
  std::vector<bool> used(m.cols());
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (used[c]) continue;
    std::size_t partner = m.cols();
    for (std::size_t e = c + 1; e < m.cols() && partner == m.cols(); ++e) {
      if (used[e]) continue;
      bool complement = true;
      for (std::size_t r = 0; r < m.rows() && complement; ++r) complement = m.at(r, c) != m.at(r, e);
      if (complement) partner = e;
    }
    if (partner == m.cols()) return false;
    used[c] = used[partner] = true;
    reps.push_back(c);
  }
  std::vector<bool> seen(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t pattern = 0;
    for (std::size_t i = 0; i < d; ++i) pattern |= std::size_t{m.at(r, reps[i])} << i;
    if (seen[pattern]) return false;
    seen[pattern] = true;
  }
  return true;
}

Special detect_special(const Polytope2L& p) {
  require_two_level(p);
  if (is_cube_slack(p.slack, p.d)) return Special::cube;
  if (is_cube_slack(p.slack.transpose(), p.d)) return Special::cross;
  return Special::neither;
}

PolytopeKind parse_polytope_kind(std::string_view name) {
  if (name == "suspension-cube") return PolytopeKind::suspension_cube;
  if (name == "cross-x-segment") return PolytopeKind::cross_x_segment;
  if (name == "cube") return PolytopeKind::cube;
  if (name == "cross") return PolytopeKind::cross;
  if (name == "simplex") return PolytopeKind::simplex;
  if (name == "prism") return PolytopeKind::prism;
  throw BadParameter("unknown polytope kind: " + std::string(name));
}

std::string_view to_string(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::suspension_cube: return "suspension-cube";
    case PolytopeKind::cross_x_segment: return "cross-x-segment";
    case PolytopeKind::cube: return "cube";
    case PolytopeKind::cross: return "cross";
    case PolytopeKind::simplex: return "simplex";
    case PolytopeKind::prism: return "prism";
  }
  return "cube";
}

std::vector<QVector> polytope_vertices(PolytopeKind kind, std::size_t d) {
  const bool needs_two = kind == PolytopeKind::suspension_cube || kind == PolytopeKind::cross_x_segment ||
                         kind == PolytopeKind::prism;
  if (d < (needs_two ? 2u : 1u) || d > kMaxConstructDim)
    throw BadParameter(std::string(to_string(kind)) + " needs " + (needs_two ? "2" : "1") + " <= d <= 12");

  std::vector<QVector> out;
  switch (kind) {
    case PolytopeKind::suspension_cube:
      for (const auto& s : sign_vectors(d - 1)) {
        QVector v(d);
        for (std::size_t i = 0; i + 1 < d; ++i) v[i] = s[i];
        out.push_back(std::move(v));
      }
      out.push_back(QVector::unit(d, d - 1));
      out.push_back(-QVector::unit(d, d - 1));
      break;
    case PolytopeKind::cross_x_segment:
      for (std::size_t i = 0; i + 1 < d; ++i)
        for (const auto& s : sign_vectors(2)) {
          QVector v(d);
          v[i] = s[0];
          v[d - 1] = s[1];
          out.push_back(std::move(v));
        }
      break;
    case PolytopeKind::cube:
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) out.push_back(QVector::from_mask(d, m));
      break;
    case PolytopeKind::cross:
      for (std::size_t i = 0; i < d; ++i) {
        out.push_back(QVector::unit(d, i));
        out.push_back(-QVector::unit(d, i));
      }
      break;
    case PolytopeKind::simplex:
      out.push_back(QVector::zero(d));
      for (std::size_t i = 0; i < d; ++i) out.push_back(QVector::unit(d, i));
      break;
    case PolytopeKind::prism:
      for (int h = 0; h < 2; ++h) {
        QVector base(d);
        base[d - 1] = h;
        out.push_back(base);
        for (std::size_t i = 0; i + 1 < d; ++i) out.push_back(base + QVector::unit(d, i));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope2L construct_polytope(PolytopeKind kind, std::size_t d) { return make_polytope(polytope_vertices(kind, d)); }

Lemma3Certificate verify_lemma3(const std::vector<QVector>& basis) {
  const std::size_t d = basis.size();
  if (d == 0) throw SingularBasis("empty basis");
  for (const auto& v : basis)
    if (v.dim() != d) throw DimensionMismatch("the basis needs d vectors in dimension d");
  if (rank(basis) != d) throw SingularBasis("input vectors are linearly dependent");

  QVector s = basis[d - 1];
  for (std::size_t i = 0; i + 1 < d; ++i) s += basis[i];
  std::vector<QVector> points{QVector::zero(d), s};
  std::vector<QVector> from, to;
  const QVector ed = QVector::unit(d, d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    points.push_back(basis[i]);
    points.push_back(s - basis[i]);
    from.push_back(basis[i]);
    to.push_back(ed + QVector::unit(d, i));
  }
  from.push_back(s);
  to.push_back(ed * Rational(2));

  const auto inv = inverse(QMatrix::from_columns(from));
  if (!inv) throw SingularBasis("input vectors are linearly dependent");
  Lemma3Certificate cert;
  cert.map = QMatrix::from_columns(to) * *inv;
  for (const auto& x : points) cert.image.push_back(cert.map * x - ed);
  std::sort(cert.image.begin(), cert.image.end());

  std::vector<QVector> cross = polytope_vertices(PolytopeKind::cross, d);
  cert.pass = cert.image == cross;
  return cert;
}

std::vector<QVector> random_rational_basis(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw BadParameter("basis dimension must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  while (true) {
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < d; ++i) {
      QVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = Rational(num(rng), den(rng));
      basis.push_back(std::move(v));
    }
    if (rank(basis) == d) return basis;
  }
}

SlackSizes slack_sizes(const ProductMatrix& slack) {
  const std::size_t rows = slack.rows(), cols = slack.cols();
  std::set<std::vector<bool>> columns;
  std::size_t classes = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<bool> col(rows), flipped(rows);
    bool zero = false, one = false;
    for (std::size_t r = 0; r < rows; ++r) {
      col[r] = slack.at(r, c);
      flipped[r] = !col[r];
      (col[r] ? one : zero) = true;
    }
    if (!zero || !one) throw MalformedSlack("column " + std::to_string(c) + " is not a 2-level facet");
    if (!columns.insert(col).second) throw MalformedSlack("column " + std::to_string(c) + " is repeated");
    if (!columns.count(flipped)) ++classes;
  }
  const std::size_t r = slack.rank();
  if (r < 2) throw MalformedSlack("slack matrix has rank below 2");
  return {static_cast<std::int64_t>(rows), static_cast<std::int64_t>(classes) + 1, r - 1};
}

ConjectureReport audit_conjecture_on_slacks(const std::vector<ProductMatrix>& slacks, std::size_t d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> sizes;
  for (const auto& m : slacks) {
    const auto s = slack_sizes(m);
    if (s.d != d)
      throw MalformedSlack("slack matrix has dimension " + std::to_string(s.d) + ", expected " + std::to_string(d));
    sizes.emplace_back(s.size_a, s.size_b);
  }
  return check_conjecture1(sizes, d);
}

}  // namespace bsp
