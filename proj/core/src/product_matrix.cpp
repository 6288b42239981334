#include "bsp/product_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bsp/errors.hpp"
#include "bsp/linalg.hpp"

namespace bsp {

ProductMatrix ProductMatrix::from_bit_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ProductMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ParseError("bit rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw ParseError(std::string("bad bit character '") + ch + "'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

std::vector<std::string> ProductMatrix::bit_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c)) out[r][c] = '1';
  return out;
}

ProductMatrix ProductMatrix::transpose() const {
  ProductMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

std::size_t ProductMatrix::rank() const {
  // Rank is computed on the orientation with fewer columns to keep minors small.
  const bool flip = cols_ > rows_;
  const std::size_t nr = flip ? cols_ : rows_;
  const std::size_t nc = flip ? rows_ : cols_;
  std::vector<std::vector<std::int64_t>> a(nr, std::vector<std::int64_t>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = flip ? at(c, r) : at(r, c);
  return integer_rank(std::move(a));
}

bool ProductMatrix::rows_distinct() const {
  auto rows = bit_rows();
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

bool ProductMatrix::cols_distinct() const { return transpose().rows_distinct(); }

ProductMatrix product_matrix(const BspPair& p) {
  ProductMatrix m(p.a.size(), p.b.size());
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    for (std::size_t j = 0; j < p.b.size(); ++j) {
      const Rational v = dot(p.a[i], p.b[j]);
      if (!v.is_zero() && !v.is_one()) {
        throw BadParameter("product <" + p.a[i].str() + ", " + p.b[j].str() + "> = " + v.str() +
                           " is not binary");
      }
      m.set(i, j, v.is_one());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Canonical form by individualization and refinement.
//
// Rows and columns are the two colour classes of a bipartite graph. A node of
// the search tree is an ordered partition refined to be equitable; children
// individualize one vertex of the first non-singleton cell. Every leaf orders
// rows and columns, and the least resulting matrix is the representative.
// Leaves with equal matrices yield automorphisms, which prune children lying
// in one orbit of the stabilizer of the current path.

namespace {

constexpr std::uint8_t kKeyFormat = 0;

std::size_t row_bytes(std::size_t cols) { return (cols + 7) / 8; }

struct Partition {
  std::vector<int> lab;  // position -> vertex
  std::vector<int> pos;  // vertex -> position
  std::vector<int> start;  // position -> first position of its cell
  std::vector<int> end;    // cell start -> one past its last position
};

class Labeler {
 public:
  explicit Labeler(const ProductMatrix& m) : m_(m), rows_(m.rows()), n_(m.rows() + m.cols()), adj_(n_) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.at(r, c)) {
          adj_[r].push_back(static_cast<int>(rows_ + c));
          adj_[rows_ + c].push_back(static_cast<int>(r));
        }
    count_.assign(n_, 0);
    queued_.assign(n_, 0);
  }

  std::vector<std::uint8_t> run() {
    Partition p;
    p.lab.resize(n_);
    p.pos.resize(n_);
    p.start.resize(n_);
    p.end.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      p.lab[v] = p.pos[v] = static_cast<int>(v);
      p.start[v] = v < rows_ ? 0 : static_cast<int>(rows_);
    }
    std::vector<int> queue;
    if (rows_ > 0) {
      p.end[0] = static_cast<int>(rows_);
      queue.push_back(0);
    }
    if (n_ > rows_) {
      p.end[rows_] = static_cast<int>(n_);
      queue.push_back(static_cast<int>(rows_));
    }
    refine(p, queue);
    std::vector<int> path;
    search(p, path);
    return best_;
  }

 private:
  void refine(Partition& p, std::vector<int> queue) {
    for (int w : queue) queued_[w] = 1;
    std::vector<int> touched_vertices, touched_cells;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int w = queue[qi];
      queued_[w] = 0;
      touched_vertices.clear();
      touched_cells.clear();
      for (int i = w; i < p.end[w]; ++i)
        for (int u : adj_[p.lab[i]])
          if (count_[u]++ == 0) {
            touched_vertices.push_back(u);
            touched_cells.push_back(p.start[p.pos[u]]);
          }
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      for (int s : touched_cells) {
        const int e = p.end[s];
        if (e - s == 1) continue;
        std::sort(p.lab.begin() + s, p.lab.begin() + e, [&](int a, int b) { return count_[a] < count_[b]; });
        if (count_[p.lab[s]] == count_[p.lab[e - 1]]) continue;
        const bool was_queued = queued_[s] != 0;
        int cs = s;
        for (int i = s; i < e; ++i) {
          p.pos[p.lab[i]] = i;
          if (i > s && count_[p.lab[i]] != count_[p.lab[i - 1]]) {
            p.end[cs] = i;
            if (cs != s || !was_queued) push(queue, cs);
            cs = i;
          }
          p.start[i] = cs;
        }
        p.end[cs] = e;
        push(queue, cs);
      }
      for (int u : touched_vertices) count_[u] = 0;
    }
  }

  void push(std::vector<int>& queue, int cell) {
    if (queued_[cell]) return;
    queued_[cell] = 1;
    queue.push_back(cell);
  }

  // Moves v to the front of its cell as a singleton and refines.
  void individualize(Partition& p, int v) {
    const int s = p.start[p.pos[v]], e = p.end[s];
    const int i = p.pos[v];
    std::swap(p.lab[s], p.lab[i]);
    p.pos[p.lab[i]] = i;
    p.pos[v] = s;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (int j = s + 1; j < e; ++j) p.start[j] = s + 1;
    refine(p, {s});
  }

  std::vector<std::uint8_t> certificate(const Partition& p) const {
    const std::size_t cols = n_ - rows_, wb = row_bytes(cols);
    std::vector<std::uint8_t> out(rows_ * wb, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (m_.at(static_cast<std::size_t>(p.lab[i]), static_cast<std::size_t>(p.lab[rows_ + j]) - rows_))
          out[i * wb + j / 8] |= static_cast<std::uint8_t>(0x80 >> (j % 8));
    return out;
  }

  void leaf(const Partition& p) {
    auto cert = certificate(p);
    if (first_lab_.empty()) {
      first_ = best_ = std::move(cert);
      first_lab_ = best_lab_ = p.lab;
      return;
    }
    const std::vector<int>* target = nullptr;
    if (cert == first_) {
      target = &first_lab_;
    } else if (cert == best_) {
      target = &best_lab_;
    } else if (cert < best_) {
      best_ = std::move(cert);
      best_lab_ = p.lab;
      return;
    }
    if (!target) return;
    std::vector<int> gamma(n_);
    for (std::size_t i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(p.lab[i])] = (*target)[i];
    gens_.push_back(std::move(gamma));
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  void search(const Partition& p, std::vector<int>& path) {
    int s = 0;
    while (s < static_cast<int>(n_) && p.end[s] - s == 1) s = p.end[s];
    if (s >= static_cast<int>(n_)) {
      leaf(p);
      return;
    }
    std::vector<int> cell(p.lab.begin() + s, p.lab.begin() + p.end[s]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    std::vector<int> uf(n_);
    for (int v : cell) {
      if (!explored.empty()) {
        // Orbits of the generators that fix the path pointwise.
        std::iota(uf.begin(), uf.end(), 0);
        for (const auto& g : gens_) {
          if (!std::all_of(path.begin(), path.end(), [&](int x) { return g[x] == x; })) continue;
          for (std::size_t x = 0; x < n_; ++x) {
            const int a = find(uf, static_cast<int>(x)), b = find(uf, g[x]);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
          }
        }
        const int root = find(uf, v);
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return find(uf, u) == root; })) continue;
      }
      Partition child = p;
      individualize(child, v);
      path.push_back(v);
      search(child, path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  const ProductMatrix& m_;
  std::size_t rows_, n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> count_;
  std::vector<char> queued_;
  std::vector<std::vector<int>> gens_;
  std::vector<std::uint8_t> first_, best_;
  std::vector<int> first_lab_, best_lab_;
};

// Key of m under row and column permutations only.
CanonicalKey permutation_key(const ProductMatrix& m) {
  if (m.rows() > 0xFFFF || m.cols() > 0xFFFF) throw BadParameter("matrix too large for a key");
  CanonicalKey key;
  auto& b = key.bytes;
  b.push_back(static_cast<std::uint8_t>(m.rows() >> 8));
  b.push_back(static_cast<std::uint8_t>(m.rows()));
  b.push_back(static_cast<std::uint8_t>(m.cols() >> 8));
  b.push_back(static_cast<std::uint8_t>(m.cols()));
  b.push_back(kKeyFormat);
  const auto cert = Labeler(m).run();
  b.insert(b.end(), cert.begin(), cert.end());
  return key;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto v : bytes) {
    s.push_back(digits[v >> 4]);
    s.push_back(digits[v & 15]);
  }
  return s;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError("hex key has odd length");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw ParseError(std::string("bad hex digit '") + ch + "'");
  };
  CanonicalKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return key;
}

CanonicalKey canonical_key(const ProductMatrix& m, bool include_transpose) {
  if (!include_transpose) return permutation_key(m);
  if (m.rows() > m.cols()) return permutation_key(m);
  if (m.rows() < m.cols()) return permutation_key(m.transpose());
  return std::min(permutation_key(m), permutation_key(m.transpose()));
}

ProductMatrix decode_key(const CanonicalKey& key) {
  const auto& b = key.bytes;
  if (b.size() < 5) throw ParseError("key too short");
  const std::size_t rows = (std::size_t{b[0]} << 8) | b[1];
  const std::size_t cols = (std::size_t{b[2]} << 8) | b[3];
  if (b[4] != kKeyFormat) throw ParseError("unknown key format");
  const std::size_t wb = row_bytes(cols);
  if (b.size() != 5 + rows * wb) throw ParseError("key length does not match its header");
  ProductMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (b[5 + r * wb + c / 8] >> (7 - c % 8)) & 1);
  return m;
}

ProductMatrix canonical_form(const ProductMatrix& m, bool include_transpose) {
  return decode_key(canonical_key(m, include_transpose));
}

BspPair factorize(const ProductMatrix& m) {
  std::vector<QVector> row_vecs;
  row_vecs.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QVector v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m.at(r, c) ? 1 : 0;
    row_vecs.push_back(std::move(v));
  }
  const auto basis_rows = independent_subset(row_vecs);
  const std::size_t d = basis_rows.size();
  if (d == 0) throw NotSpanning("zero matrix has no factorization");

  std::vector<QVector> b_vecs;
  b_vecs.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    QVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = m.at(basis_rows[i], c) ? 1 : 0;
    b_vecs.push_back(std::move(v));
  }
  const auto basis_cols = independent_subset(b_vecs);
  // x_r solves <x_r, b_j> = m[r][j] on the chosen columns; the rank condition
  // makes the remaining columns agree automatically.
  std::vector<QVector> chosen;
  for (auto j : basis_cols) chosen.push_back(b_vecs[j]);
  const QMatrix inv = *inverse(QMatrix::from_rows(chosen));

  std::vector<QVector> a_vecs;
  a_vecs.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QVector rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = m.at(r, basis_cols[i]) ? 1 : 0;
    a_vecs.push_back(inv * rhs);
  }
  return {d, VectorFamily(d, std::move(a_vecs)), VectorFamily(d, std::move(b_vecs))};
}

}  // namespace bsp
