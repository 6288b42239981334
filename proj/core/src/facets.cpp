#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"
#include "bsp/polytope.hpp"

namespace bsp {

namespace {

__extension__ typedef __int128 Wide;

using IVec = std::vector<std::int64_t>;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("facet computation left the 64-bit range");
  return static_cast<std::int64_t>(v);
}

std::int64_t idot(const IVec& a, const IVec& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return narrow(s);
}

void make_primitive(IVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Integer points scaled by the common denominator.
struct Scaled {
  std::size_t d = 0;
  std::vector<IVec> pts;
  mpz_class scale = 1;
};

Scaled scale_points(const std::vector<QVector>& points) {
  Scaled s;
  s.d = points.front().dim();
  for (const auto& p : points)
    for (const auto& x : p) s.scale = lcm(s.scale, x.denominator());
  for (const auto& p : points) {
    IVec v(s.d);
    for (std::size_t i = 0; i < s.d; ++i) {
      const mpz_class z = p[i].numerator() * (s.scale / p[i].denominator());
      if (!z.fits_slong_p()) throw ArithmeticOverflow("vertex coordinates too large");
      v[i] = z.get_si();
    }
    s.pts.push_back(std::move(v));
  }
  return s;
}

struct IFacet {
  IVec normal;
  std::int64_t offset;
  friend auto operator<=>(const IFacet&, const IFacet&) = default;
};

// Side test and normalization of a candidate hyperplane normal. Returns false
// unless all points lie weakly on one side.
bool orient(const Scaled& s, IVec n, std::int64_t beta, std::set<IFacet>& out) {
  bool below = true, above = true;
  for (const auto& p : s.pts) {
    const std::int64_t v = idot(n, p);
    if (v > beta) below = false;
    if (v < beta) above = false;
    if (!below && !above) return false;
  }
  if (!below) {
    for (auto& x : n) x = -x;
    beta = -beta;
  }
  out.insert({std::move(n), beta});
  return true;
}

std::set<IFacet> facets_by_subsets(const Scaled& s) {
  const std::size_t d = s.d, n = s.pts.size();
  std::set<IFacet> out;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<IVec> diff(d - 1, IVec(d));
  std::vector<IVec> minor(d - 1, IVec(d - 1));
  while (true) {
    const IVec& p0 = s.pts[idx[0]];
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) diff[r - 1][c] = narrow(static_cast<Wide>(s.pts[idx[r]][c]) - p0[c]);
    // Generalized cross product of the difference rows.
    IVec normal(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0, cc = 0; c < d; ++c)
          if (c != j) minor[r][cc++] = diff[r][c];
      const std::int64_t det = integer_determinant(minor);
      normal[j] = j % 2 ? -det : det;
      nonzero = nonzero || det != 0;
    }
    if (nonzero) {
      make_primitive(normal);
      const std::int64_t beta = idot(normal, p0);
      orient(s, std::move(normal), beta, out);
    }
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  IVec y;  // (beta, normal)
  Bits zeros;
};

// Extreme rays of {y : beta - <n, p> >= 0 for every point p}, which are the
// facet inequalities of the polytope.
std::set<IFacet> facets_by_double_description(const Scaled& s) {
  const std::size_t d = s.d, n = s.pts.size();
  std::vector<IVec> rows;
  for (const auto& p : s.pts) {
    IVec a(d + 1);
    a[0] = 1;
    for (std::size_t i = 0; i < d; ++i) a[i + 1] = -p[i];
    rows.push_back(std::move(a));
  }

  // Start from d+1 independent rows.
  std::vector<std::size_t> order;
  std::vector<IVec> basis;
  for (std::size_t i = 0; i < n && basis.size() < d + 1; ++i) {
    basis.push_back(rows[i]);
    if (integer_rank(basis) == basis.size()) {
      order.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);

  // Columns of the adjugate, signed by the determinant, are the initial rays.
  const std::int64_t det = integer_determinant(basis);
  std::vector<Ray> rays;
  for (std::size_t c = 0; c <= d; ++c) {
    IVec y(d + 1);
    for (std::size_t r = 0; r <= d; ++r) {
      std::vector<IVec> minor;
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == c) continue;
        IVec row;
        for (std::size_t j = 0; j <= d; ++j)
          if (j != r) row.push_back(basis[i][j]);
        minor.push_back(std::move(row));
      }
      const std::int64_t cof = integer_determinant(minor);
      y[r] = ((r + c) % 2 ? -cof : cof) * (det < 0 ? -1 : 1);
    }
    make_primitive(y);
    Ray ray{std::move(y), Bits(n)};
    for (std::size_t k = 0; k <= d; ++k)
      if (k != c) ray.zeros.set(order[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = d + 1; step < n; ++step) {
    const std::size_t row = order[step];
    const IVec& a = rows[row];
    std::vector<std::int64_t> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = idot(a, rays[i].y);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zeros.set(row);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        Bits z = rays[ip].zeros & rays[in].zeros;
        if (z.count() + 1 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != ip && k != in && z.subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        IVec y(d + 1);
        for (std::size_t j = 0; j <= d; ++j)
          y[j] = narrow(static_cast<Wide>(val[ip]) * rays[in].y[j] - static_cast<Wide>(val[in]) * rays[ip].y[j]);
        make_primitive(y);
        z.set(row);
        next.push_back({std::move(y), std::move(z)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) rays[i].zeros.set(row);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  std::set<IFacet> out;
  for (auto& r : rays) {
    IVec normal(r.y.begin() + 1, r.y.end());
    make_primitive(normal);
    std::int64_t beta = INT64_MIN;
    for (const auto& p : s.pts) beta = std::max(beta, idot(normal, p));
    out.insert({std::move(normal), beta});
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

}  // namespace

std::vector<Facet> facets(const std::vector<QVector>& input, FacetMethod method) {
  if (input.empty()) throw NotFullDimensional("no points given");
  const std::size_t d = input.front().dim();
  if (d == 0) throw BadParameter("points must have dimension at least 1");
  for (const auto& p : input)
    if (p.dim() != d) throw DimensionMismatch("points of different dimensions");
  std::vector<QVector> points = input;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_dim(points) != static_cast<int>(d)) throw NotFullDimensional("points do not affinely span the space");

  const Scaled s = scale_points(points);
  if (method == FacetMethod::automatic)
    method = binomial(points.size(), d) <= 2e5 ? FacetMethod::subsets : FacetMethod::double_description;
  const std::set<IFacet> found =
      method == FacetMethod::subsets ? facets_by_subsets(s) : facets_by_double_description(s);

  // A point is a vertex iff the normals of its facets span.
  for (std::size_t i = 0; i < s.pts.size(); ++i) {
    std::vector<IVec> tight;
    for (const auto& f : found)
      if (idot(f.normal, s.pts[i]) == f.offset) tight.push_back(f.normal);
    if (integer_rank(tight) < d) throw BadParameter("point " + points[i].str() + " is not a vertex");
  }

  std::vector<Facet> out;
  for (const auto& f : found) {
    QVector normal(d);
    for (std::size_t i = 0; i < d; ++i) normal[i] = f.normal[i];
    out.push_back({std::move(normal), Rational(mpq_class(mpz_class(f.offset), s.scale))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bsp
