#include "bsp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"

namespace bsp {

namespace {

std::vector<QVector> level_set(const VectorFamily& a, const QVector& b, const Rational& value) {
  std::vector<QVector> out;
  for (const auto& x : a)
    if (dot(x, b) == value) out.push_back(x);
  return out;
}

std::set<Rational> values_on(const std::vector<QVector>& pts, const QVector& b) {
  std::set<Rational> vals;
  for (const auto& x : pts) vals.insert(dot(x, b));
  return vals;
}

const QVector& colex_first(const std::vector<QVector>& vs) {
  return *std::min_element(vs.begin(), vs.end(), colex_less);
}

QVector project_off(const QVector& b, const QVector& axis) {
  return b - axis * (dot(b, axis) / dot(axis, axis));
}

bool has_opposite_points(const VectorFamily& f) {
  for (const auto& v : f)
    if (!v.is_zero() && f.contains(-v)) return true;
  return false;
}

std::int64_t pow2(std::size_t e) { return std::int64_t{1} << e; }

std::int64_t size_of(const auto& c) { return static_cast<std::int64_t>(c.size()); }

}  // namespace

int bd_score(const BspPair& p, const QVector& b) {
  const auto a0 = level_set(p.a, b, 0);
  const auto a1 = level_set(p.a, b, 1);
  return std::max(affine_dim(a0), affine_dim(a1));
}

std::vector<QVector> bd_candidates(const BspPair& p) {
  std::vector<QVector> nonzero;
  for (const auto& b : p.b)
    if (!b.is_zero()) nonzero.push_back(b);
  std::sort(nonzero.begin(), nonzero.end(), colex_less);
  std::vector<QVector> best;
  int best_score = -2;
  for (const auto& b : nonzero) {
    const int s = bd_score(p, b);
    if (s > best_score) {
      best_score = s;
      best.clear();
    }
    if (s == best_score) best.push_back(b);
  }
  return best;
}

QVector choose_bd(const BspPair& p) {
  auto c = bd_candidates(p);
  if (c.empty()) throw NotSpanning("family B has no nonzero vector");
  return c.front();
}

NormalizedPair normalize(const BspPair& p, const QVector& b_d_in) {
  if (!p.b.contains(b_d_in) || b_d_in.is_zero()) {
    throw BadParameter("b_d must be a nonzero member of B, got " + b_d_in.str());
  }
  const std::size_t d = p.dim;
  std::vector<QVector> a(p.a.begin(), p.a.end());
  std::vector<QVector> b(p.b.begin(), p.b.end());
  QVector b_d = b_d_in;
  NormalizedPair out;
  out.dim = d;

  auto split = [&](const std::vector<QVector>& pts, std::vector<QVector>& s0, std::vector<QVector>& s1) {
    s0.clear();
    s1.clear();
    for (const auto& x : pts) {
      const Rational v = dot(x, b_d);
      if (v.is_zero()) s0.push_back(x);
      else if (v.is_one()) s1.push_back(x);
    }
  };

  std::vector<QVector> a0, a1;
  split(a, a0, a1);
  if (a0.size() < a1.size()) {
    const QVector shift = colex_first(a1);
    for (auto& x : a) x -= shift;
    for (auto& y : b)
      if (y == b_d) y = -y;
    b_d = -b_d;
    out.translated = true;
    split(a, a0, a1);
  }

  for (auto& y : b) {
    if (values_on(a0, y).contains(Rational(-1))) {
      y = -y;
      ++out.flipped;
    }
  }

  if (!a1.empty()) {
    const QVector base = colex_first(a1);
    std::vector<QVector> a1_shifted;
    for (const auto& x : a1) a1_shifted.push_back(x - base);
    for (auto& y : b) {
      const auto on0 = values_on(a0, y);
      if (on0.size() == 1 && on0.begin()->is_zero() && values_on(a1_shifted, y).contains(Rational(-1))) {
        y = -y;
        ++out.flipped;
      }
    }
  }

  out.a = VectorFamily(d, std::move(a));
  out.b = VectorFamily(d, std::move(b));
  out.b_d = b_d;

  // Post-conditions.
  std::size_t n0 = 0, n1 = 0;
  for (const auto& x : out.a) {
    const Rational v = dot(x, out.b_d);
    if (v.is_zero()) ++n0;
    else if (v.is_one()) ++n1;
    else throw NormalizationFailed("product with b_d is " + v.str());
  }
  if (n0 < n1) throw NormalizationFailed("|A_0| < |A_1| after normalization");
  for (const auto& x : out.a) {
    if (!dot(x, out.b_d).is_zero()) continue;
    for (const auto& y : out.b) {
      const Rational v = dot(x, y);
      if (!v.is_zero() && !v.is_one()) throw NormalizationFailed("non-binary product on A_0: " + v.str());
    }
  }
  std::vector<QVector> proj;
  for (const auto& y : out.b) proj.push_back(project_off(y, out.b_d));
  if (has_opposite_points(VectorFamily(d, std::move(proj)))) {
    throw NormalizationFailed("projection of B contains opposite points");
  }
  return out;
}

Decomposition decompose(const NormalizedPair& np) {
  const std::size_t d = np.dim;
  Decomposition dec;
  dec.pair = np;
  const auto a0 = level_set(np.a, np.b_d, 0);
  const auto a1 = level_set(np.a, np.b_d, 1);
  dec.a0 = VectorFamily(d, a0);
  dec.a1 = VectorFamily(d, a1);
  dec.u0_dim = rank(a0);

  std::map<QVector, std::vector<QVector>> fibres;
  for (const auto& y : np.b) fibres[project_off(y, np.b_d)].push_back(y);

  std::vector<QVector> pi, tau, star, b0, b1;
  for (const auto& [img, pre] : fibres) {
    pi.push_back(img);
    tau.push_back(project_onto_span(img, a0));
    dec.max_preimages = std::max(dec.max_preimages, pre.size());
    if (pre.size() == 1) {
      star.push_back(pre.front());
      continue;
    }
    for (const auto& y : pre) {
      const bool const0 = values_on(a0, y).size() == 1;
      const bool const1 = values_on(a1, y).size() == 1;
      if (const0 && const1) {
        ++dec.ambiguous;
        (y.is_zero() || y == np.b_d ? b1 : b0).push_back(y);
      } else if (const0) {
        b0.push_back(y);
      } else if (const1) {
        b1.push_back(y);
      } else {
        dec.unassigned.push_back(y);
      }
    }
  }
  dec.pi_b = VectorFamily(d, std::move(pi));
  dec.tau_pi_b = VectorFamily(d, std::move(tau));
  dec.b_star = VectorFamily(d, std::move(star));
  dec.b0 = VectorFamily(d, std::move(b0));
  dec.b1 = VectorFamily(d, std::move(b1));
  return dec;
}

Decomposition decompose(const BspPair& p, std::optional<QVector> b_d) {
  return decompose(normalize(p, b_d ? *b_d : choose_bd(p)));
}

bool AuditReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.pass; });
}

std::vector<std::string> AuditReport::failures() const {
  std::vector<std::string> out;
  for (const auto& i : items)
    if (!i.pass) out.push_back(i.name);
  return out;
}

AuditReport audit(const Decomposition& dec) {
  const std::size_t d = dec.pair.dim;
  AuditReport rep;
  auto le = [&](std::string name, std::int64_t lhs, std::int64_t rhs) {
    rep.items.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };

  const auto A = size_of(dec.pair.a);
  const auto B = size_of(dec.pair.b);
  const auto A0 = size_of(dec.a0), A1 = size_of(dec.a1);
  const auto B0 = size_of(dec.b0), B1 = size_of(dec.b1);
  const auto piB = size_of(dec.pi_b), star = size_of(dec.b_star);
  const auto full = pow2(d);

  std::int64_t non_binary_on_a0 = 0;
  for (const auto& x : dec.a0)
    for (const auto& y : dec.pair.b) {
      const Rational v = dot(x, y);
      if (!v.is_zero() && !v.is_one()) ++non_binary_on_a0;
    }
  std::int64_t opposite = 0;
  for (const auto& v : dec.pi_b)
    if (!v.is_zero() && dec.pi_b.contains(-v)) ++opposite;

  le("claim1_i_a1_le_a0", A1, A0);
  le("claim1_i_split_covers_a", A, A0 + A1);
  le("claim1_ii_nonbinary_on_a0", non_binary_on_a0, 0);
  le("claim1_iii_opposite_points", opposite, 0);
  le("claim2_max_preimages", static_cast<std::int64_t>(dec.max_preimages), 2);
  rep.items.push_back({"preimage_count_identity", B, 2 * piB - star, B == 2 * piB - star});
  le("ineq0", A * B, 2 * A0 * piB + A1 * (B - star));
  le("claim3", piB, pow2(d - 1 - dec.u0_dim) * size_of(dec.tau_pi_b));
  le("claim4_unassigned", size_of(dec.unassigned), 0);
  le("claim5_i0", A0 * B0, full);
  le("claim5_i1", A1 * B1, full);
  le("eq8_a1b1", A1 * B1, full);
  le("eq8_a0b0_plus2", A0 * (B0 + 2), full);
  le("ineq1", A * B, (static_cast<std::int64_t>(dec.u0_dim) + 1) * full + A0 * B0 + A1 * B1);

  const VectorFamily* as[2] = {&dec.a0, &dec.a1};
  const VectorFamily* bs[2] = {&dec.b0, &dec.b1};
  for (int i = 0; i < 2; ++i) {
    const std::string s = std::to_string(i);
    const int dim_a = affine_dim(as[i]->vectors());
    const auto span_b = static_cast<int>(rank(bs[i]->vectors()));
    if (dim_a >= 0) le("ineq_cl5_a" + s, size_of(*as[i]), pow2(static_cast<std::size_t>(dim_a)));
    le("ineq_cl5_b" + s, size_of(*bs[i]), pow2(static_cast<std::size_t>(span_b)));
    le("ineq_cl5_dims" + s, std::max(dim_a, 0) + span_b, static_cast<std::int64_t>(d));
  }
  return rep;
}

bool PairAudit::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.second.pass(); });
}

PairAudit audit_all_choices(const BspPair& p) {
  PairAudit out;
  for (const auto& b : bd_candidates(p)) {
    out.reports.emplace_back(b, audit(decompose(p, b)));
    ++out.choices;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using IntPoint = std::vector<std::int64_t>;

std::vector<IntPoint> slice_universe(std::size_t d) {
  std::vector<IntPoint> u;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    IntPoint x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (m >> i) & 1;
    u.push_back(x);
  }
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
    IntPoint x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = -static_cast<std::int64_t>((m >> i) & 1);
    u.push_back(x);
  }
  return u;
}

IntPoint negated(IntPoint x) {
  for (auto& v : x) v = -v;
  return x;
}

bool opposite_free(const std::vector<IntPoint>& xs) {
  std::set<IntPoint> s(xs.begin(), xs.end());
  for (const auto& x : xs) {
    const auto nx = negated(x);
    if (nx != x && s.contains(nx)) return false;
  }
  return true;
}

int int_affine_dim(const std::vector<IntPoint>& xs) {
  if (xs.empty()) return -1;
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    IntPoint v(xs[i].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = xs[i][j] - xs[0][j];
    diffs.push_back(std::move(v));
  }
  return static_cast<int>(integer_rank(std::move(diffs)));
}

void check_slice_set(const std::vector<IntPoint>& xs, LemsliceReport& rep) {
  ++rep.sets_checked;
  if (xs.empty()) return;
  const int dim = int_affine_dim(xs);
  const auto cap = std::uint64_t{1} << dim;
  if (xs.size() > cap) {
    std::string msg = "opposite-free set of size " + std::to_string(xs.size()) + " with affine dimension " +
                      std::to_string(dim) + ":";
    for (const auto& x : xs) {
      msg += " (";
      for (std::size_t j = 0; j < x.size(); ++j) msg += (j ? "," : "") + std::to_string(x[j]);
      msg += ")";
    }
    throw CounterexampleFound(msg);
  }
  if (xs.size() == cap) ++rep.tight;
}

}  // namespace

LemsliceReport check_lemslice_exhaustive(std::size_t d) {
  if (d == 0 || d > 3) throw BadParameter("exhaustive slice check supports 1 <= d <= 3");
  const auto u = slice_universe(d);
  LemsliceReport rep{d, true, 0, 0};
  std::vector<IntPoint> xs;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << u.size()); ++m) {
    xs.clear();
    for (std::size_t i = 0; i < u.size(); ++i)
      if ((m >> i) & 1) xs.push_back(u[i]);
    if (!opposite_free(xs)) continue;
    check_slice_set(xs, rep);
  }
  return rep;
}

LemsliceReport check_lemslice_random(std::size_t d, std::uint64_t seed, std::uint64_t trials) {
  if (d == 0 || d > 20) throw BadParameter("random slice check supports 1 <= d <= 20");
  std::mt19937_64 rng(seed);
  LemsliceReport rep{d, false, 0, 0};
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, (std::uint64_t{1} << d) - 1);

  const std::size_t points_per_trial = std::min<std::size_t>(64, std::size_t{1} << (d + 1));
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<IntPoint> xs;
    const bool on_hyperplane = coin(rng) == 1;
    IntPoint c(d);
    std::int64_t delta = coin(rng);
    for (auto& v : c) v = coeff(rng);
    const double p = density(rng);
    std::bernoulli_distribution keep(p);
    // Sample cube points of either sign; the hyperplane filter is exact integer arithmetic.
    for (std::size_t s = 0; s < points_per_trial * 2; ++s) {
      const std::uint64_t m = mask_dist(rng);
      const std::int64_t sign = coin(rng) ? 1 : -1;
      IntPoint x(d);
      std::int64_t dotc = 0;
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = sign * static_cast<std::int64_t>((m >> i) & 1);
        dotc += c[i] * x[i];
      }
      if (on_hyperplane ? dotc == delta : keep(rng)) xs.push_back(std::move(x));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::shuffle(xs.begin(), xs.end(), rng);
    std::set<IntPoint> kept;
    for (const auto& x : xs) {
      const auto nx = negated(x);
      if (nx == x || !kept.contains(nx)) kept.insert(x);
    }
    check_slice_set(std::vector<IntPoint>(kept.begin(), kept.end()), rep);
  }
  return rep;
}

}  // namespace bsp
