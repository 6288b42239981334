#include "bsp/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "bsp/closure.hpp"
#include "bsp/cube_context.hpp"
#include "bsp/errors.hpp"
#include "bsp/io.hpp"

namespace bsp {

BspPair entry_pair(const CatalogEntry& e) { return factorize(e.matrix); }

CatalogEntry make_entry(const CanonicalKey& key) {
  CatalogEntry e;
  e.key = key;
  e.matrix = decode_key(key);
  e.size_a = e.matrix.rows();
  e.size_b = e.matrix.cols();
  return e;
}

unsigned resolve_workers(unsigned requested) {
  if (const char* env = std::getenv("BSP_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, requested);
}

namespace {

using KeySet = std::set<CanonicalKey>;

// Close-by-One over the cube points: a node is a closed set (intent) with its
// extent among the candidates; children add one point above `next` and keep
// only closures that agree with the parent below that point.
struct Node {
  std::uint64_t intent = 0;
  std::vector<std::uint32_t> extent;
  std::size_t next = 0;
};

class Search {
 public:
  explicit Search(const CubeContext& ctx) : ctx_(ctx) {}

  Node root() const {
    Node n;
    n.extent.resize(ctx_.num_candidates());
    std::iota(n.extent.begin(), n.extent.end(), 0u);
    n.intent = ctx_.intent(n.extent);
    n.next = 1;
    return n;
  }

  std::vector<Node> children(const Node& n) const {
    std::vector<Node> out;
    for (std::size_t j = n.next; j < ctx_.num_points(); ++j) {
      Node c;
      if (extend(n, j, c)) out.push_back(std::move(c));
    }
    return out;
  }

  void emit(const Node& n, KeySet& keys) const {
    if (!ctx_.is_orbit_min(n.intent) || !ctx_.spans(n.intent)) return;
    keys.insert(canonical_key(ctx_.matrix(n.extent, n.intent), true));
  }

  void subtree(const Node& n, KeySet& keys) const {
    emit(n, keys);
    Node c;
    for (std::size_t j = n.next; j < ctx_.num_points(); ++j) {
      if (extend(n, j, c)) subtree(c, keys);
    }
  }

 private:
  bool extend(const Node& n, std::size_t j, Node& out) const {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (n.intent & bit) return false;
    out.extent.clear();
    std::uint64_t closed = ctx_.full_mask();
    for (auto x : n.extent) {
      const std::uint64_t c = ctx_.compat(x);
      if (c & bit) {
        out.extent.push_back(x);
        closed &= c;
      }
    }
    const std::uint64_t low = bit - 1;
    if ((closed & low) != (n.intent & low)) return false;
    out.intent = closed;
    out.next = j + 1;
    return true;
  }

  const CubeContext& ctx_;
};

struct Checkpoint {
  std::set<std::size_t> done;
  KeySet keys;
};

Checkpoint load_checkpoint(const std::string& path, std::size_t d, std::size_t units) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  try {
    const Json j = Json::parse(in);
    if (j.at("d").get<std::size_t>() != d) throw CheckpointCorrupt("checkpoint is for another dimension");
    for (const auto& u : j.at("done_branches")) {
      const auto id = u.get<std::size_t>();
      if (id >= units) throw CheckpointCorrupt("checkpoint branch id out of range");
      cp.done.insert(id);
    }
    for (const auto& k : j.at("partial_keys")) cp.keys.insert(CanonicalKey::from_hex(k.get<std::string>()));
  } catch (const CheckpointCorrupt&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointCorrupt("cannot read checkpoint " + path + ": " + e.what());
  }
  return cp;
}

void write_checkpoint(const std::string& path, std::size_t d, const Checkpoint& cp) {
  Json j;
  j["d"] = d;
  j["done_branches"] = Json(std::vector<std::size_t>(cp.done.begin(), cp.done.end()));
  Json keys = Json::array();
  for (const auto& k : cp.keys) keys.push_back(k.hex());
  j["partial_keys"] = std::move(keys);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Catalog to_catalog(std::size_t d, const KeySet& keys, bool complete) {
  Catalog c;
  c.d = d;
  c.complete = complete;
  c.classes.reserve(keys.size());
  for (const auto& k : keys) c.classes.push_back(make_entry(k));
  return c;
}

}  // namespace

Catalog enumerate(std::size_t d, const EnumerateOptions& options) {
  if (d == 0 || d > CubeContext::kMaxDim) throw BadParameter("enumeration supports 1 <= d <= 6");
  const CubeContext ctx(d);
  const Search search(ctx);

  // Work units: unit 0 covers the root and its children; unit k >= 1 is the
  // subtree below the k-th grandchild of the root.
  const Node root = search.root();
  const std::vector<Node> level1 = search.children(root);
  std::vector<Node> level2;
  for (const auto& n : level1)
    for (auto& c : search.children(n)) level2.push_back(std::move(c));
  const std::size_t units = level2.size() + 1;

  Checkpoint state;
  if (!options.checkpoint_path.empty()) state = load_checkpoint(options.checkpoint_path, d, units);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  const auto start = std::chrono::steady_clock::now();
  auto last_write = start;
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  auto worker = [&] {
    try {
      for (std::size_t u; !stop && (u = next++) < units;) {
        {
          std::lock_guard lock(mu);
          if (state.done.contains(u)) continue;
        }
        if (options.time_limit_s > 0 && elapsed() > options.time_limit_s) {
          stop = true;
          break;
        }
        KeySet local;
        if (u == 0) {
          search.emit(root, local);
          for (const auto& n : level1) search.emit(n, local);
        } else {
          search.subtree(level2[u - 1], local);
        }
        std::lock_guard lock(mu);
        state.keys.merge(local);
        state.done.insert(u);
        const auto now = std::chrono::steady_clock::now();
        if (!options.checkpoint_path.empty() &&
            std::chrono::duration<double>(now - last_write).count() >= options.checkpoint_interval_s) {
          write_checkpoint(options.checkpoint_path, d, state);
          last_write = now;
        }
        if (options.progress) options.progress({state.done.size(), units, state.keys.size()});
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  const unsigned workers = resolve_workers(options.workers);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  const bool complete = state.done.size() == units;
  if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, d, state);
  return to_catalog(d, state.keys, complete);
}

Catalog brute_force(std::size_t d) {
  if (d == 0 || d > 3) throw BadParameter("brute force supports 1 <= d <= 3");
  const std::size_t n = std::size_t{1} << d;
  KeySet keys;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    std::vector<QVector> pts;
    for (std::size_t p = 0; p < n; ++p)
      if ((mask >> p) & 1) pts.push_back(QVector::from_mask(d, p));
    const VectorFamily b(d, std::move(pts));
    if (!b.spans() || closure(b) != b) continue;
    const BspPair pair{d, a_max(b), b};
    keys.insert(canonical_key(product_matrix(pair), true));
  }
  return to_catalog(d, keys, true);
}

SizeStats stats(const Catalog& c) {
  SizeStats s;
  const auto d = static_cast<std::int64_t>(c.d);
  for (const auto& e : c.classes) {
    const auto m = static_cast<std::int64_t>(e.size_a), n = static_cast<std::int64_t>(e.size_b);
    s.closed_sizes.insert({m, n});
    s.closed_sizes.insert({n, m});
  }
  for (const auto& [m, n] : s.closed_sizes)
    for (std::int64_t i = d; i <= m; ++i)
      for (std::int64_t j = d; j <= n; ++j) s.achievable.insert({i, j});
  for (const auto& p : s.closed_sizes) {
    const bool dominated = std::any_of(s.closed_sizes.begin(), s.closed_sizes.end(), [&](const SizePair& q) {
      return q != p && q.first >= p.first && q.second >= p.second;
    });
    if (!dominated) s.maximal.push_back(p);
  }
  for (const auto& [m, n] : s.achievable) {
    s.max_product = std::max(s.max_product, m * n);
    if (m >= d + 2 && n >= d + 2) s.max_product_large = std::max(s.max_product_large, m * n);
    s.min_product.insert({std::min(m, n), m * n});
  }
  return s;
}

ReferenceDiff verify_against_reference(const std::set<SizePair>& computed, const std::set<SizePair>& reference) {
  ReferenceDiff diff;
  std::set_difference(reference.begin(), reference.end(), computed.begin(), computed.end(),
                      std::back_inserter(diff.missing));
  std::set_difference(computed.begin(), computed.end(), reference.begin(), reference.end(),
                      std::back_inserter(diff.extra));
  return diff;
}

std::set<SizePair> read_size_pairs(std::istream& in) {
  std::set<SizePair> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::int64_t a = 0, b = 0;
    if (!(ss >> a)) continue;
    std::string rest;
    if (!(ss >> b) || (ss >> rest)) throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
    out.insert({a, b});
  }
  return out;
}

void write_catalog_jsonl(std::ostream& out, const Catalog& c) {
  for (const auto& e : c.classes) {
    Json j;
    j["d"] = c.d;
    j["size_a"] = e.size_a;
    j["size_b"] = e.size_b;
    j["matrix"] = e.matrix.bit_rows();
    j["key"] = e.key.hex();
    out << j.dump() << '\n';
  }
}

Catalog read_catalog_jsonl(std::istream& in) {
  Catalog c;
  c.complete = true;
  std::string line;
  std::size_t lineno = 0;
  bool have_d = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "catalog line " + std::to_string(lineno) + ": ";
    try {
      const Json j = Json::parse(line);
      const auto d = j.at("d").get<std::size_t>();
      if (have_d && d != c.d) throw ParseError(where + "mixed dimensions");
      c.d = d;
      have_d = true;
      auto e = make_entry(CanonicalKey::from_hex(j.at("key").get<std::string>()));
      const auto m = ProductMatrix::from_bit_rows(j.at("matrix").get<std::vector<std::string>>());
      if (m != e.matrix || j.at("size_a").get<std::size_t>() != e.size_a ||
          j.at("size_b").get<std::size_t>() != e.size_b) {
        throw ParseError(where + "matrix or sizes disagree with the key");
      }
      c.classes.push_back(std::move(e));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(where + ex.what());
    }
  }
  std::sort(c.classes.begin(), c.classes.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return c;
}

}  // namespace bsp
