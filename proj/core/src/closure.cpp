#include "bsp/closure.hpp"

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"

namespace bsp {

namespace {

// Every solution is pinned down by its 0/1 values on a basis inside `f`, so it
// suffices to solve the 2^d systems on that basis and filter by the rest.
VectorFamily binary_partners(const VectorFamily& f) {
  const std::size_t d = f.dim();
  if (d == 0 || d >= 63) throw BadParameter("unsupported dimension " + std::to_string(d));
  const auto basis_idx = independent_subset(f.vectors());
  if (basis_idx.size() != d) {
    throw NotSpanning("family of rank " + std::to_string(basis_idx.size()) +
                      " does not span Q^" + std::to_string(d));
  }
  std::vector<QVector> basis;
  for (auto i : basis_idx) basis.push_back(f[i]);
  const QMatrix inv = *inverse(QMatrix::from_rows(basis));

  std::vector<QVector> out;
  for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
    QVector x = inv * QVector::from_mask(d, mask);
    bool ok = true;
    for (const auto& v : f) {
      const Rational p = dot(x, v);
      if (!p.is_zero() && !p.is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(x));
  }
  return VectorFamily(d, std::move(out));
}

}  // namespace

VectorFamily a_max(const VectorFamily& b) { return binary_partners(b); }

VectorFamily b_max(const VectorFamily& a) { return binary_partners(a); }

VectorFamily closure(const VectorFamily& b) { return b_max(a_max(b)); }

BspPair close_pair(const BspPair& p) {
  VectorFamily b = closure(p.b);
  VectorFamily a = a_max(b);
  return {p.dim, std::move(a), std::move(b)};
}

bool is_closed_pair(const BspPair& p) {
  return p.a.spans() && p.b.spans() && a_max(p.b) == p.a && b_max(p.a) == p.b;
}

}  // namespace bsp
