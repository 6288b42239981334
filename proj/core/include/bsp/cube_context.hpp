#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bsp/product_matrix.hpp"
#include "bsp/rational.hpp"

namespace bsp {

/// Incidence structure behind the enumeration, in coordinates where some basis
/// of A is the standard basis. Cube points b in {0,1}^d are indexed by their
/// bitmask. Candidates are every x = M^{-1} delta for an invertible M whose rows
/// are cube points and delta in {0,1}^d; every a_max of a spanning subset of the
/// cube lies among them. compat(x) has bit b set iff <x, b> is 0 or 1.
class CubeContext {
 public:
  static constexpr std::size_t kMaxDim = 6;

  /// Throws BadParameter unless 1 <= d <= 6.
  explicit CubeContext(std::size_t d);

  std::size_t dim() const { return d_; }
  std::size_t num_points() const { return std::size_t{1} << d_; }
  std::uint64_t full_mask() const { return full_; }
  std::size_t num_candidates() const { return compat_.size(); }
  std::uint64_t compat(std::size_t i) const { return compat_[i]; }

  /// Candidate i as an exact vector.
  QVector candidate(std::size_t i) const;

  /// Common compatible cube points of the given candidates.
  std::uint64_t intent(std::span<const std::uint32_t> extent) const;

  /// Rank of the cube points in `mask` equals d.
  bool spans(std::uint64_t mask) const;

  /// Image of a cube-point set under the i-th coordinate permutation.
  std::uint64_t permute(std::uint64_t mask, std::size_t perm) const;
  std::size_t num_permutations() const { return perms_; }
  /// No coordinate permutation maps `mask` to a numerically smaller mask.
  bool is_orbit_min(std::uint64_t mask) const;

  /// Products of extent (rows, in the given order) against the points of
  /// `intent` (columns, increasing index).
  ProductMatrix matrix(std::span<const std::uint32_t> extent, std::uint64_t intent) const;

 private:
  struct Candidate {
    std::int8_t den;
    std::array<std::int8_t, kMaxDim> num;
  };

  std::size_t d_;
  std::uint64_t full_;
  std::vector<Candidate> cands_;
  std::vector<std::uint64_t> compat_;
  std::size_t perms_ = 0;
  // perm_table_[p][byte][value]: image bits of the cube points value * 2^(8 byte).
  std::vector<std::array<std::array<std::uint64_t, 256>, 8>> perm_table_;
};

}  // namespace bsp
