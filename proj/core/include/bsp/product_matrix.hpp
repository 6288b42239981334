#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsp/family.hpp"

namespace bsp {

/// Dense 0/1 matrix. Used for scalar-product tables and polytope slack matrices.
class ProductMatrix {
 public:
  ProductMatrix() = default;
  ProductMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols) {}

  /// Rows given as strings over {'0','1'} of equal length. Throws ParseError.
  static ProductMatrix from_bit_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  std::vector<std::string> bit_rows() const;
  ProductMatrix transpose() const;
  /// Exact rank over Q.
  std::size_t rank() const;
  bool rows_distinct() const;
  bool cols_distinct() const;

  friend bool operator==(const ProductMatrix&, const ProductMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Rows indexed by p.a, columns by p.b, both in family order. Throws BadParameter
/// if some product is not 0 or 1.
ProductMatrix product_matrix(const BspPair& p);

/// Serialized representative of a permutation class. Bytes: rows (u16 BE), cols
/// (u16 BE), format byte 0, then the canonical rows packed MSB first, each row
/// padded to whole bytes.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  /// Throws ParseError on malformed hex.
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Equal keys iff the matrices agree up to row and column permutations (and
/// transposition when `include_transpose`). Sides above 65535 throw BadParameter.
CanonicalKey canonical_key(const ProductMatrix& m, bool include_transpose);

/// The matrix a key encodes. Throws ParseError on malformed keys.
ProductMatrix decode_key(const CanonicalKey& key);

/// decode_key(canonical_key(m, include_transpose)). With the transpose flag the
/// result has at least as many rows as columns.
ProductMatrix canonical_form(const ProductMatrix& m, bool include_transpose);

/// A pair realizing `m` as a product table: some rows of m become the standard
/// basis of A, and B lies in {0,1}^d with d = rank(m). Throws NotSpanning for the
/// zero matrix.
BspPair factorize(const ProductMatrix& m);

}  // namespace bsp
