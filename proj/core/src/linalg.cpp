#include "bsp/linalg.hpp"

#include <algorithm>
#include <utility>

#include "bsp/errors.hpp"

namespace bsp {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row; rank is unaffected by row scaling.
ZMatrix to_integer_rows(const QMatrix& m) {
  ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).value();
      z[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return z;
}

std::size_t bareiss_rank(ZMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[r][k] * a[rank][c] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < pivot_cols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    const Rational inv = Rational(1) / m(row, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) { return bareiss_rank(to_integer_rows(m)); }

std::size_t rank(std::span<const QVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(QMatrix::from_rows(vectors));
}

int affine_dim(std::span<const QVector> points) {
  if (points.empty()) return -1;
  std::vector<QVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

std::vector<std::size_t> independent_subset(std::span<const QVector> vectors) {
  std::vector<std::size_t> chosen;
  // Echelon rows with their pivot columns, kept normalized to pivot 1.
  std::vector<std::pair<std::size_t, QVector>> echelon;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    QVector v = vectors[i];
    for (const auto& [pc, row] : echelon) {
      if (!v[pc].is_zero()) v -= row * v[pc];
    }
    std::size_t pc = 0;
    while (pc < v.dim() && v[pc].is_zero()) ++pc;
    if (pc == v.dim()) continue;
    v *= Rational(1) / v[pc];
    echelon.emplace_back(pc, std::move(v));
    chosen.push_back(i);
  }
  return chosen;
}

std::optional<Solution> solve(const QMatrix& a, const QVector& rhs) {
  if (a.rows() != rhs.dim()) throw DimensionMismatch("solve: rhs length differs from row count");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = rhs[r];
  }
  const auto pivots = rref(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, a.cols()).is_zero()) return std::nullopt;
  }
  Solution s{QVector(a.cols()), pivots.size() < a.cols()};
  for (std::size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = aug(r, a.cols());
  return s;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (rref(aug, n).size() < n) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<QVector> dual_basis(std::span<const QVector> basis) {
  if (basis.empty()) throw SingularBasis("dual_basis: empty basis");
  const std::size_t d = basis[0].dim();
  if (basis.size() != d) throw SingularBasis("dual_basis: need exactly d vectors");
  const auto inv = inverse(QMatrix::from_rows(basis));
  if (!inv) throw SingularBasis("dual_basis: vectors are linearly dependent");
  std::vector<QVector> duals;
  duals.reserve(d);
  for (std::size_t j = 0; j < d; ++j) duals.push_back(inv->col(j));
  return duals;
}

QVector project_onto_span(const QVector& x, std::span<const QVector> spanning) {
  std::vector<QVector> basis;
  for (auto i : independent_subset(spanning)) basis.push_back(spanning[i]);
  if (basis.empty()) return QVector::zero(x.dim());
  const std::size_t k = basis.size();
  QMatrix gram(k, k);
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], x);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  const auto coeffs = solve(gram, rhs);
  QVector y = QVector::zero(x.dim());
  for (std::size_t i = 0; i < k; ++i) y += basis[i] * coeffs->x[i];
  return y;
}

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("integer elimination overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::size_t integer_rank(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        const Wide v = static_cast<Wide>(a[r][k]) * a[rank][c] -
                           static_cast<Wide>(a[r][c]) * a[rank][k];
        a[r][k] = narrow(v / prev);
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide v = static_cast<Wide>(a[i][j]) * a[k][k] -
                           static_cast<Wide>(a[i][k]) * a[k][j];
        a[i][j] = narrow(v / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace bsp
