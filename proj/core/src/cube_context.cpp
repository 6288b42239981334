#include "bsp/cube_context.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "bsp/errors.hpp"

namespace bsp {

namespace {

using Mat = std::array<std::array<std::int64_t, CubeContext::kMaxDim>, CubeContext::kMaxDim>;

std::int64_t small_det(Mat m, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Cofactor C(r, c) of an n x n matrix.
std::int64_t cofactor(const Mat& m, std::size_t n, std::size_t r, std::size_t c) {
  Mat minor{};
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (j == c) continue;
      minor[ii][jj++] = m[i][j];
    }
    ++ii;
  }
  const std::int64_t det = small_det(minor, n - 1);
  return ((r + c) % 2 ? -det : det);
}

std::uint64_t pack(std::int64_t den, const std::array<std::int64_t, CubeContext::kMaxDim>& num) {
  std::uint64_t key = static_cast<std::uint8_t>(static_cast<std::int8_t>(den));
  for (auto v : num) key = (key << 8) | static_cast<std::uint8_t>(static_cast<std::int8_t>(v));
  return key;
}

}  // namespace

CubeContext::CubeContext(std::size_t d) : d_(d) {
  if (d == 0 || d > kMaxDim) throw BadParameter("cube context supports 1 <= d <= 6");
  const std::size_t n = num_points();
  full_ = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  // Candidates from every basis of nonzero cube points.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint32_t> idx(d);
  std::iota(idx.begin(), idx.end(), 1u);
  const auto last = static_cast<std::uint32_t>(n - 1);
  while (true) {
    Mat b{};
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) b[r][c] = (idx[r] >> c) & 1;
    const std::int64_t det = small_det(b, d);
    if (det != 0) {
      Mat adj{};  // adj[c][r] = C(r, c), so x = adj * delta / det solves b x = delta
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) adj[c][r] = d == 1 ? 1 : cofactor(b, d, r, c);
      for (std::uint64_t delta = 0; delta < (std::uint64_t{1} << d); ++delta) {
        std::array<std::int64_t, kMaxDim> num{};
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if ((delta >> j) & 1) num[i] += adj[i][j];
        std::int64_t g = det;
        for (std::size_t i = 0; i < d; ++i) g = std::gcd(g, num[i]);
        g = std::abs(g);
        if (det < 0) g = -g;
        std::int64_t den = det / g;
        for (std::size_t i = 0; i < d; ++i) num[i] /= g;
        if (seen.insert(pack(den, num)).second) {
          Candidate cand{static_cast<std::int8_t>(den), {}};
          for (std::size_t i = 0; i < d; ++i) cand.num[i] = static_cast<std::int8_t>(num[i]);
          cands_.push_back(cand);
        }
      }
    }
    // Next d-combination of {1, ..., n-1}.
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == last - (d - i)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) {
    if (a.den != b.den) return a.den < b.den;
    return a.num < b.num;
  });

  compat_.reserve(cands_.size());
  for (const auto& c : cands_) {
    std::uint64_t m = 0;
    for (std::uint64_t p = 0; p < n; ++p) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if ((p >> j) & 1) s += c.num[j];
      if (s == 0 || s == c.den) m |= std::uint64_t{1} << p;
    }
    compat_.push_back(m);
  }

  // Coordinate permutations acting on cube points.
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  const std::size_t bytes = (n + 7) / 8;
  do {
    std::vector<std::uint64_t> image(n);
    for (std::uint64_t p = 0; p < n; ++p) {
      std::uint64_t q = 0;
      for (std::size_t i = 0; i < d; ++i)
        if ((p >> i) & 1) q |= std::uint64_t{1} << sigma[i];
      image[p] = q;
    }
    auto& table = perm_table_.emplace_back();
    for (std::size_t byte = 0; byte < bytes; ++byte) {
      for (std::size_t v = 0; v < 256; ++v) {
        std::uint64_t out = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t p = byte * 8 + bit;
          if (p < n && ((v >> bit) & 1)) out |= std::uint64_t{1} << image[p];
        }
        table[byte][v] = out;
      }
    }
    ++perms_;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

QVector CubeContext::candidate(std::size_t i) const {
  QVector v(d_);
  for (std::size_t j = 0; j < d_; ++j) v[j] = Rational(cands_[i].num[j], cands_[i].den);
  return v;
}

std::uint64_t CubeContext::intent(std::span<const std::uint32_t> extent) const {
  std::uint64_t m = full_;
  for (auto x : extent) m &= compat_[x];
  return m;
}

bool CubeContext::spans(std::uint64_t mask) const {
  std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> rows{};
  std::array<std::size_t, kMaxDim> pivot{};
  std::size_t rank = 0;
  for (std::uint64_t m = mask; m && rank < d_; m &= m - 1) {
    const auto p = static_cast<std::uint64_t>(std::countr_zero(m));
    std::array<std::int64_t, kMaxDim> v{};
    for (std::size_t j = 0; j < d_; ++j) v[j] = (p >> j) & 1;
    for (std::size_t r = 0; r < rank; ++r) {
      const std::int64_t f = v[pivot[r]];
      if (f == 0) continue;
      const std::int64_t g = rows[r][pivot[r]];
      std::int64_t h = 0;
      for (std::size_t j = 0; j < d_; ++j) {
        v[j] = v[j] * g - rows[r][j] * f;
        h = std::gcd(h, v[j]);
      }
      if (h > 1)
        for (std::size_t j = 0; j < d_; ++j) v[j] /= h;
    }
    std::size_t pc = 0;
    while (pc < d_ && v[pc] == 0) ++pc;
    if (pc == d_) continue;
    rows[rank] = v;
    pivot[rank] = pc;
    ++rank;
  }
  return rank == d_;
}

std::uint64_t CubeContext::permute(std::uint64_t mask, std::size_t perm) const {
  const auto& table = perm_table_[perm];
  std::uint64_t out = 0;
  for (std::size_t byte = 0; mask; ++byte, mask >>= 8) out |= table[byte][mask & 0xFF];
  return out;
}

bool CubeContext::is_orbit_min(std::uint64_t mask) const {
  for (std::size_t p = 1; p < perms_; ++p)
    if (permute(mask, p) < mask) return false;
  return true;
}

ProductMatrix CubeContext::matrix(std::span<const std::uint32_t> extent, std::uint64_t intent) const {
  std::vector<std::uint64_t> cols;
  for (std::uint64_t m = intent; m; m &= m - 1) cols.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
  ProductMatrix out(extent.size(), cols.size());
  for (std::size_t r = 0; r < extent.size(); ++r) {
    const auto& c = cands_[extent[r]];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d_; ++j)
        if ((cols[k] >> j) & 1) s += c.num[j];
      if (s != 0 && s != c.den) throw BadParameter("extent and intent are not compatible");
      out.set(r, k, s != 0);
    }
  }
  return out;
}

}  // namespace bsp
