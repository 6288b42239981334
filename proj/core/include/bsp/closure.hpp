#pragma once

#include "bsp/family.hpp"

namespace bsp {

/// The full set {x : <x, v> in {0,1} for all v in b}. `b` must span (NotSpanning);
/// the result is finite, contains 0 and has at most 2^d elements.
VectorFamily a_max(const VectorFamily& b);

/// Same construction seen from the other side: all y with <v, y> in {0,1} for v in a.
VectorFamily b_max(const VectorFamily& a);

/// b_max(a_max(b)). Extensive, monotone and idempotent on spanning families.
VectorFamily closure(const VectorFamily& b);

/// Smallest maximal pair containing `p`: (a_max(B'), B') with B' = closure(p.b).
BspPair close_pair(const BspPair& p);

/// a = a_max(b) and b = b_max(a).
bool is_closed_pair(const BspPair& p);

}  // namespace bsp
