#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bsp/family.hpp"
#include "bsp/product_matrix.hpp"

namespace bsp {

struct CatalogEntry {
  CanonicalKey key;
  std::size_t size_a = 0;  ///< rows of `matrix`; never smaller than size_b
  std::size_t size_b = 0;
  ProductMatrix matrix;    ///< decode_key(key)

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// One class per closed spanning pair up to linear isomorphism of each family
/// and swapping the two families. Entries are sorted by key.
struct Catalog {
  std::size_t d = 0;
  std::vector<CatalogEntry> classes;
  bool complete = false;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// A pair realizing the entry (A = rows, B = columns).
BspPair entry_pair(const CatalogEntry& e);
CatalogEntry make_entry(const CanonicalKey& key);

struct EnumerateProgress {
  std::size_t units_done = 0;
  std::size_t units_total = 0;
  std::size_t classes = 0;
};

struct EnumerateOptions {
  unsigned workers = 1;  ///< BSP_WORKERS in the environment takes precedence
  std::string checkpoint_path;  ///< empty: no checkpointing
  double checkpoint_interval_s = 10.0;
  double time_limit_s = 0.0;  ///< 0: unlimited; otherwise stop early with complete = false
  std::function<void(const EnumerateProgress&)> progress;
};

/// Worker count after applying BSP_WORKERS; at least 1.
unsigned resolve_workers(unsigned requested);

/// Exhaustive isomorph-free generation for 1 <= d <= 6 (d = 6 is slow).
/// Resumes from options.checkpoint_path when that file exists. Throws
/// BadParameter or CheckpointCorrupt.
Catalog enumerate(std::size_t d, const EnumerateOptions& options = {});

/// Independent check for d <= 3: every subset of {0,1}^d containing 0, closed
/// with exact rational arithmetic.
Catalog brute_force(std::size_t d);

using SizePair = std::pair<std::int64_t, std::int64_t>;

struct SizeStats {
  std::set<SizePair> closed_sizes;  ///< sizes of closed pairs, both orientations
  /// Every (m, n) with d <= m, n realized by some spanning pair (subfamilies of
  /// closed pairs that still span).
  std::set<SizePair> achievable;
  std::vector<SizePair> maximal;  ///< maximal under the product order, sorted
  std::int64_t max_product = 0;
  /// max product over achievable pairs with both sizes >= d + 2 (0 if none).
  std::int64_t max_product_large = 0;
  /// (min(m, n), m n) over achievable pairs.
  std::set<SizePair> min_product;
};

SizeStats stats(const Catalog& c);

struct ReferenceDiff {
  std::vector<SizePair> missing;  ///< in the reference but not computed
  std::vector<SizePair> extra;    ///< computed but not in the reference
  bool empty() const { return missing.empty() && extra.empty(); }
};

ReferenceDiff verify_against_reference(const std::set<SizePair>& computed, const std::set<SizePair>& reference);

/// Whitespace-separated integer pairs, one per line; '#' starts a comment.
/// Throws ParseError.
std::set<SizePair> read_size_pairs(std::istream& in);

void write_catalog_jsonl(std::ostream& out, const Catalog& c);
/// Throws ParseError, including when a key does not re-encode its matrix. The
/// file format carries no completeness flag; the result is marked complete.
Catalog read_catalog_jsonl(std::istream& in);

}  // namespace bsp
