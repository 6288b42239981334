#include "bsp/family.hpp"

#include <algorithm>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"

namespace bsp {

VectorFamily::VectorFamily(std::size_t dim, std::vector<QVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.dim() != dim_) {
      throw DimensionMismatch("vector " + v.str() + " is not in dimension " + std::to_string(dim_));
    }
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool VectorFamily::contains(const QVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

bool VectorFamily::is_subset_of(const VectorFamily& other) const {
  return std::includes(other.vectors_.begin(), other.vectors_.end(), vectors_.begin(),
                       vectors_.end());
}

std::size_t VectorFamily::rank() const { return bsp::rank(vectors_); }

ProductCheck verify_binary_products(const VectorFamily& a, const VectorFamily& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("families live in different dimensions");
  for (const auto& x : a) {
    for (const auto& y : b) {
      Rational v = dot(x, y);
      if (!v.is_zero() && !v.is_one()) return {false, ProductWitness{x, y, std::move(v)}};
    }
  }
  return {};
}

void require_valid_pair(const BspPair& p) {
  if (p.a.dim() != p.dim || p.b.dim() != p.dim) {
    throw DimensionMismatch("pair families do not match the declared dimension");
  }
  if (!p.a.spans()) throw NotSpanning("family A does not span Q^" + std::to_string(p.dim));
  if (!p.b.spans()) throw NotSpanning("family B does not span Q^" + std::to_string(p.dim));
  const auto check = verify_binary_products(p.a, p.b);
  if (!check.ok) {
    throw BadParameter("product <" + check.witness->a.str() + ", " + check.witness->b.str() +
                       "> = " + check.witness->value.str() + " is not binary");
  }
}

bool is_valid_pair(const BspPair& p) {
  try {
    require_valid_pair(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace bsp
