#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace oracle {

std::vector<std::size_t> rref(std::vector<Row>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(std::vector<Row> m) { return rref(m).size(); }

std::optional<Row> unique_solution(const std::vector<Row>& rows, const Row& rhs) {
  if (rows.empty()) return std::nullopt;
  const std::size_t n = rows[0].size();
  std::vector<Row> aug = rows;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  const auto piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  if (piv.size() != n) return std::nullopt;
  Row x(n);
  for (std::size_t i = 0; i < n; ++i) x[piv[i]] = aug[i][n];
  return x;
}

namespace {

std::vector<std::string> sorted_rows(const ProductMatrix& m, const std::vector<std::size_t>& col_order) {
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string s;
    for (std::size_t c : col_order) s += m.at(r, c) ? '1' : '0';
    rows.push_back(s);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool same_up_to_permutation(ProductMatrix x, ProductMatrix y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  if (x.cols() > x.rows()) {
    x = x.transpose();
    y = y.transpose();
  }
  std::vector<std::size_t> id(x.cols());
  std::iota(id.begin(), id.end(), 0);
  const auto target = sorted_rows(x, id);
  std::vector<std::size_t> perm = id;
  do {
    if (sorted_rows(y, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Rational dot_rows(const QVector& a, const QVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

bool equivalent_by_search(const ProductMatrix& x, const ProductMatrix& y, bool allow_transpose) {
  if (same_up_to_permutation(x, y)) return true;
  return allow_transpose && same_up_to_permutation(x, y.transpose());
}

std::set<QVector> binary_partners(const std::vector<QVector>& b) {
  std::vector<Row> rows;
  for (const auto& v : b) rows.emplace_back(v.begin(), v.end());
  std::set<QVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
    Row rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = Rational(static_cast<int>((mask >> i) & 1));
    if (auto x = unique_solution(rows, rhs)) out.insert(QVector(*x));
  }
  return out;
}

FacetRow scale_facet(Row normal, Rational offset) {
  Rational lead;
  for (const auto& x : normal)
    if (!x.is_zero()) {
      lead = x.sign() < 0 ? -x : x;
      break;
    }
  for (auto& x : normal) x /= lead;
  return {normal, offset / lead};
}

std::set<FacetRow> facets_by_subsets(const std::vector<QVector>& points) {
  const std::size_t d = points.at(0).dim(), n = points.size();
  std::set<FacetRow> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(d), pick.end(), true);
  do {
    // Rows (p, -1) so that (normal, offset) spans the kernel.
    std::vector<Row> m;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) {
        Row r(points[i].begin(), points[i].end());
        r.push_back(Rational(-1));
        m.push_back(r);
      }
    const auto piv = rref(m);
    if (piv.size() != d) continue;
    std::size_t free_col = 0;
    while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
    Row kernel(d + 1);
    kernel[free_col] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) kernel[piv[i]] = -m[i][free_col];
    Row normal(kernel.begin(), kernel.begin() + static_cast<std::ptrdiff_t>(d));
    Rational offset = kernel[d];
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x.is_zero(); })) continue;
    bool below = true, above = true;
    for (const auto& p : points) {
      const Rational v = dot_rows(QVector(normal), p) - offset;
      below = below && v.sign() <= 0;
      above = above && v.sign() >= 0;
    }
    if (!below && !above) continue;
    if (!below) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    out.insert(scale_facet(normal, offset));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

ProductMatrix cube_slack(std::size_t d) {
  ProductMatrix m(std::size_t{1} << d, 2 * d);
  for (std::size_t v = 0; v < m.rows(); ++v)
    for (std::size_t i = 0; i < d; ++i) {
      const bool bit = (v >> i) & 1;
      m.set(v, i, bit);       // slack of -x_i <= 0
      m.set(v, d + i, !bit);  // slack of x_i <= 1
    }
  return m;
}

ProductMatrix cross_slack(std::size_t d) {
  ProductMatrix m(2 * d, std::size_t{1} << d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < m.cols(); ++s) {
      const bool sign_plus = (s >> i) & 1;
      // Vertex e_i (row i) and -e_i (row d + i): slack 1 - <s, x> is 0 or 2.
      m.set(i, s, !sign_plus);
      m.set(d + i, s, sign_plus);
    }
  return m;
}

}  // namespace oracle
