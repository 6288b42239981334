#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bsp/rational.hpp"

namespace bsp {

/// Exact rank over Q (fraction-free Bareiss elimination on the row-scaled integer matrix).
std::size_t rank(const QMatrix& m);
std::size_t rank(std::span<const QVector> vectors);

/// Affine dimension of a point set; -1 for the empty set.
int affine_dim(std::span<const QVector> points);

/// Indices of a greedily chosen maximal linearly independent subset, in input order.
std::vector<std::size_t> independent_subset(std::span<const QVector> vectors);

struct Solution {
  QVector x;
  /// The system has a positive-dimensional solution set; `x` sets free variables to 0.
  bool underdetermined = false;
};

/// Solves a·x = rhs exactly. std::nullopt means the system is inconsistent.
std::optional<Solution> solve(const QMatrix& a, const QVector& rhs);

/// Inverse of a square matrix, or std::nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Returns a_1*, ..., a_d* with <a_i, a_j*> = delta_ij. Throws SingularBasis.
std::vector<QVector> dual_basis(std::span<const QVector> basis);

/// Orthogonal projection of x onto span(spanning) via the Gram matrix of a basis.
QVector project_onto_span(const QVector& x, std::span<const QVector> spanning);

/// Exact rank of a small integer matrix. Throws ArithmeticOverflow if an
/// intermediate minor leaves the 128-bit range.
std::size_t integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Exact determinant of a small square integer matrix (Bareiss).
std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m);

}  // namespace bsp
