#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsp/family.hpp"

namespace bsp {

/// max(affine dim A_0, affine dim A_1) for the split of p.a by products with b.
int bd_score(const BspPair& p, const QVector& b);

/// Nonzero members of p.b attaining the maximal score, in colex order.
std::vector<QVector> bd_candidates(const BspPair& p);

/// First of bd_candidates. Throws NotSpanning if p.b has no nonzero vector.
QVector choose_bd(const BspPair& p);

/// Result of translating A and replacing some b by -b. B may leave {0,1}
/// products on A_1, so this is not a BspPair.
struct NormalizedPair {
  std::size_t dim = 0;
  VectorFamily a;
  VectorFamily b;
  QVector b_d;
  bool translated = false;
  std::size_t flipped = 0;  ///< vectors of B replaced by their opposites
};

/// Makes products with b_d binary with |A_0| >= |A_1|, products on A_0 binary,
/// and the projection of B along b_d free of opposite points. Translation by the
/// colex-first a* with <a*, b_d> = 1 happens only when |A_0| < |A_1|. Throws
/// NormalizationFailed if the result violates any of these.
NormalizedPair normalize(const BspPair& p, const QVector& b_d);

struct Decomposition {
  NormalizedPair pair;
  VectorFamily a0, a1;
  VectorFamily pi_b;      ///< orthogonal projection of B onto b_d^perp
  VectorFamily tau_pi_b;  ///< further projection onto span(A_0)
  VectorFamily b_star;    ///< b whose projection has a single preimage
  VectorFamily b0, b1;
  /// Members of B \ B* constant on neither A_0 nor A_1.
  std::vector<QVector> unassigned;
  /// Members of B \ B* constant on both sides, placed by the tie rule.
  std::size_t ambiguous = 0;
  std::size_t max_preimages = 0;
  std::size_t u0_dim = 0;  ///< dim span(A_0)
};

/// Splits a normalized pair along its b_d. Vectors of B \ B* constant on both
/// A_0 and A_1 go to B_1 when they are 0 or b_d and to B_0 otherwise.
Decomposition decompose(const NormalizedPair& np);

/// normalize(p, b_d) followed by decompose; b_d defaults to choose_bd(p).
Decomposition decompose(const BspPair& p, std::optional<QVector> b_d = {});

struct AuditItem {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = true;
};

struct AuditReport {
  std::vector<AuditItem> items;
  bool pass() const;
  /// Names of failing items.
  std::vector<std::string> failures() const;
};

/// Evaluates every inequality of the split exactly (lhs <= rhs, or lhs == rhs
/// for the counting identity).
AuditReport audit(const Decomposition& dec);

struct PairAudit {
  std::size_t choices = 0;  ///< tied b_d candidates examined
  std::vector<std::pair<QVector, AuditReport>> reports;
  bool pass() const;
};

/// audit(decompose(p, b)) for every b in bd_candidates(p).
PairAudit audit_all_choices(const BspPair& p);

// ---------------------------------------------------------------------------
// Opposite-free subsets of {0,1}^d u {0,-1}^d have at most 2^dim elements.

struct LemsliceReport {
  std::size_t d = 0;
  bool exhaustive = false;
  std::uint64_t sets_checked = 0;
  std::uint64_t tight = 0;  ///< |X| = 2^dim X
};

/// All opposite-free subsets of the 2^(d+1)-1 point universe; d <= 3.
/// Throws BadParameter for larger d, CounterexampleFound on a violation.
LemsliceReport check_lemslice_exhaustive(std::size_t d);

/// Seeded random sets, half of them drawn from a random hyperplane so the
/// affine dimension is often deficient; d <= 20. Throws CounterexampleFound.
LemsliceReport check_lemslice_random(std::size_t d, std::uint64_t seed, std::uint64_t trials);

}  // namespace bsp
