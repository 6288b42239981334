#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bsp/rational.hpp"

namespace bsp {

/// Finite set of vectors in Q^d. Stored sorted (lexicographically) without duplicates.
class VectorFamily {
 public:
  VectorFamily() = default;
  /// Deduplicates silently. Throws DimensionMismatch if a vector has the wrong length.
  VectorFamily(std::size_t dim, std::vector<QVector> vectors);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<QVector>& vectors() const { return vectors_; }
  const QVector& operator[](std::size_t i) const { return vectors_[i]; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  bool contains(const QVector& v) const;
  bool is_subset_of(const VectorFamily& other) const;
  std::size_t rank() const;
  bool spans() const { return rank() == dim_; }

  friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QVector> vectors_;
};

/// Two families in the same dimension. Validity (spanning, binary products) is
/// checked by the functions below, not enforced on construction, because
/// intermediate normalized pairs deliberately break it.
struct BspPair {
  std::size_t dim = 0;
  VectorFamily a;
  VectorFamily b;

  friend bool operator==(const BspPair&, const BspPair&) = default;
};

struct ProductWitness {
  QVector a;
  QVector b;
  Rational value;
};

struct ProductCheck {
  bool ok = true;
  std::optional<ProductWitness> witness;  ///< first violation when !ok
};

/// True iff every <a, b> is exactly 0 or 1. Throws DimensionMismatch.
ProductCheck verify_binary_products(const VectorFamily& a, const VectorFamily& b);

/// Throws DimensionMismatch / NotSpanning / BadParameter if `p` is not a spanning pair
/// with binary scalar products.
void require_valid_pair(const BspPair& p);
bool is_valid_pair(const BspPair& p);

}  // namespace bsp
