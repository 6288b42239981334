#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bsp/bounds.hpp"
#include "bsp/decomposition.hpp"
#include "bsp/enumeration.hpp"
#include "bsp/errors.hpp"
#include "bsp/examples.hpp"
#include "bsp/io.hpp"
#include "bsp/lemmas.hpp"
#include "bsp/polytope.hpp"
#include "svg.hpp"

namespace bsp::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Catalog load_catalog(const std::string& path) {
  std::istringstream in(read_text(path));
  return read_catalog_jsonl(in);
}

template <class Pairs>
Json pairs_json(const Pairs& pairs) {
  Json a = Json::array();
  for (const auto& [m, n] : pairs) a.push_back({m, n});
  return a;
}

Json bound_json(const BoundReport& r) {
  return {{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"applicable", r.applicable},
          {"pass", r.pass},  {"equality", r.equality}};
}

Json case_json(const std::vector<std::string>& names, const OracleCase& c) {
  Json j;
  for (std::size_t i = 0; i < names.size() && i < c.params.size(); ++i) j[names[i]] = c.params[i];
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  return j;
}

Json oracle_json(const OracleReport& r) {
  Json eq = Json::array(), bad = Json::array();
  for (const auto& c : r.equalities) eq.push_back(case_json(r.param_names, c));
  for (const auto& c : r.violations) bad.push_back(case_json(r.param_names, c));
  return {{"name", r.name}, {"checked", r.checked}, {"pass", r.pass()}, {"equalities", eq}, {"violations", bad}};
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::size_t d = 0;
  std::string out;
  unsigned workers = 1;
  std::string checkpoint;
  double checkpoint_interval = 10;
  double time_limit = 0;
  bool progress = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  EnumerateOptions opt;
  opt.workers = a.workers;
  opt.checkpoint_path = a.checkpoint;
  opt.checkpoint_interval_s = a.checkpoint_interval;
  opt.time_limit_s = a.time_limit;
  if (a.progress)
    opt.progress = [&err](const EnumerateProgress& p) {
      err << "\r" << p.units_done << "/" << p.units_total << " units, " << p.classes << " classes" << std::flush;
    };
  const Catalog cat = enumerate(a.d, opt);
  if (a.progress) err << "\n";
  std::ostringstream jsonl;
  write_catalog_jsonl(jsonl, cat);
  if (a.out.empty()) {
    out << jsonl.str();
  } else {
    write_text(a.out, jsonl.str());
    out << dump({{"d", cat.d}, {"classes", cat.classes.size()}, {"complete", cat.complete}, {"out", a.out}});
  }
  return cat.complete ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  std::string catalog;
  std::string out;
  bool csv = false;
  std::string csv_set = "maximal";
  std::string svg;
  std::string svg_min;
  std::string reference;
};

ScatterSpec sizes_plot(std::size_t d, const SizeStats& s) {
  ScatterSpec spec;
  spec.title = "Sizes of spanning pairs, d = " + std::to_string(d);
  spec.x_label = "|A|";
  spec.y_label = "|B|";
  spec.points.assign(s.achievable.begin(), s.achievable.end());
  const auto bound = check_thm4(d, 1, 1).rhs;
  spec.overlays.push_back({Overlay::Kind::hyperbola, bound, "xy = " + std::to_string(bound)});
  return spec;
}

ScatterSpec min_product_plot(std::size_t d, const SizeStats& s) {
  ScatterSpec spec;
  spec.title = "Product against smaller size, d = " + std::to_string(d);
  spec.x_label = "min(|A|, |B|)";
  spec.y_label = "|A| |B|";
  spec.points.assign(s.min_product.begin(), s.min_product.end());
  const auto all = check_thm4(d, 1, 1).rhs;
  const auto large = check_thm3(d, 1, 1).rhs;
  spec.overlays.push_back({Overlay::Kind::horizontal, all, "y = " + std::to_string(all)});
  spec.overlays.push_back({Overlay::Kind::horizontal, large, "y = " + std::to_string(large)});
  return spec;
}

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const Catalog cat = load_catalog(a.catalog);
  const SizeStats s = stats(cat);
  int code = kPass;

  Json j;
  j["d"] = cat.d;
  j["classes"] = cat.classes.size();
  j["closed_sizes"] = pairs_json(s.closed_sizes);
  j["achievable"] = pairs_json(s.achievable);
  j["maximal"] = pairs_json(s.maximal);
  j["max_product"] = s.max_product;
  j["max_product_large"] = s.max_product_large;
  j["min_product"] = pairs_json(s.min_product);
  if (!a.reference.empty()) {
    std::istringstream in(read_text(a.reference));
    const auto diff = verify_against_reference(s.achievable, read_size_pairs(in));
    j["reference"] = {{"match", diff.empty()}, {"missing", pairs_json(diff.missing)}, {"extra", pairs_json(diff.extra)}};
    if (!diff.empty()) code = kCheckFailed;
  }

  if (!a.svg.empty()) write_text(a.svg, emit_scatter(sizes_plot(cat.d, s)));
  if (!a.svg_min.empty()) write_text(a.svg_min, emit_scatter(min_product_plot(cat.d, s)));

  if (a.csv) {
    std::vector<SizePair> rows;
    std::string header = "size_a,size_b\n";
    if (a.csv_set == "maximal") {
      rows = s.maximal;
    } else if (a.csv_set == "achievable") {
      rows.assign(s.achievable.begin(), s.achievable.end());
    } else if (a.csv_set == "closed") {
      rows.assign(s.closed_sizes.begin(), s.closed_sizes.end());
    } else {
      header = "min_size,product\n";
      rows.assign(s.min_product.begin(), s.min_product.end());
    }
    std::ostringstream csv;
    csv << header;
    for (const auto& [m, n] : rows) csv << m << ',' << n << '\n';
    emit(a.out, csv.str(), out);
  } else {
    emit(a.out, dump(j), out);
  }
  return code;
}

// ---------------------------------------------------------------------------

int cmd_verify_pair(const std::string& input, const std::string& out_path, std::ostream& out) {
  const BspPair p = pair_from_json(parse_json_text(read_text(input), input));
  const auto check = verify_binary_products(p.a, p.b);
  const bool span_a = p.a.spans(), span_b = p.b.spans();
  const bool valid = check.ok && span_a && span_b;

  Json j;
  j["d"] = p.dim;
  j["size_a"] = p.a.size();
  j["size_b"] = p.b.size();
  j["product"] = p.a.size() * p.b.size();
  j["binary_products"] = check.ok;
  j["witness"] = check.witness ? Json{{"a", to_json(check.witness->a)},
                                      {"b", to_json(check.witness->b)},
                                      {"value", to_json(check.witness->value)}}
                               : Json();
  j["spanning_a"] = span_a;
  j["spanning_b"] = span_b;
  j["valid"] = valid;
  bool pass = valid;
  if (valid) {
    const auto t4 = check_thm4(p), t3 = check_thm3(p);
    const auto eq = check_thm6_equality(p);
    j["bounds"] = {bound_json(t4), bound_json(t3)};
    const char* side = eq.cube_side == CubeSide::a ? "a" : (eq.cube_side == CubeSide::b ? "b" : "none");
    j["equality_case"] = {{"equality", eq.equality_case}, {"cube_side", side}, {"consistent", eq.consistent}};
    pass = t4.pass && t3.pass && eq.consistent;
  }
  j["pass"] = pass;
  emit(out_path, dump(j), out);
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct PolytopeArgs {
  std::string input;
  std::string out;
  std::string method = "auto";
  std::string kind;
  std::size_t d = 0;
};

FacetMethod parse_method(const std::string& m) {
  if (m == "auto") return FacetMethod::automatic;
  if (m == "subsets") return FacetMethod::subsets;
  if (m == "dd") return FacetMethod::double_description;
  throw BadParameter("unknown facet method: " + m);
}

Json vertices_json(std::size_t d, const std::vector<QVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return {{"d", d}, {"vertices", arr}};
}

int cmd_polytope_example(const PolytopeArgs& a, std::ostream& out) {
  emit(a.out, dump(vertices_json(a.d, polytope_vertices(parse_polytope_kind(a.kind), a.d))), out);
  return kPass;
}

int cmd_polytope_check(const PolytopeArgs& a, std::ostream& out) {
  const Json in = parse_json_text(read_text(a.input), a.input);
  std::size_t d = 0;
  std::vector<QVector> points;
  try {
    d = in.at("d").get<std::size_t>();
    for (const auto& v : in.at("vertices")) points.push_back(vector_from_json(v, d));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("vertex list: ") + e.what());
  }
  const Polytope2L p = make_polytope(points, parse_method(a.method));

  Json facets = Json::array();
  for (const auto& f : p.facets) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  Json j;
  j["d"] = p.d;
  j["f0"] = p.vertices.size();
  j["facets_count"] = p.facets.size();
  j["two_level"] = p.two_level;
  j["facets"] = facets;
  bool pass = true;
  if (p.two_level) {
    const BspPair pair = extract_pair(p);
    const bool pair_ok = is_valid_pair(pair);
    const auto t1 = check_thm1(p), t2 = check_thm2(p);
    j["special"] = std::string(to_string(detect_special(p)));
    j["slack"] = to_json(p.slack);
    j["pair"] = {{"size_a", pair.a.size()}, {"size_b", pair.b.size()}, {"valid", pair_ok}};
    j["bounds"] = {bound_json(t1), bound_json(t2)};
    pass = pair_ok && t1.pass && t2.pass;
  }
  j["pass"] = pass;
  emit(a.out, dump(j), out);
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

int cmd_audit(const std::string& catalog, const std::string& out_path, std::ostream& out) {
  const Catalog cat = load_catalog(catalog);
  std::size_t audited = 0, choices = 0, t3_applicable = 0, equality_cases = 0;
  bool claims_ok = true, t4_ok = true, t3_ok = true, t6_ok = true;
  Json failures = Json::array();
  for (const auto& e : cat.classes) {
    const BspPair rows = entry_pair(e);
    for (const BspPair& p : {rows, BspPair{rows.dim, rows.b, rows.a}}) {
      ++audited;
      const auto pa = audit_all_choices(p);
      choices += pa.choices;
      for (const auto& [bd, rep] : pa.reports) {
        if (rep.pass()) continue;
        claims_ok = false;
        failures.push_back({{"key", e.key.hex()}, {"b_d", to_json(bd)}, {"items", rep.failures()}});
      }
      const auto t4 = check_thm4(p), t3 = check_thm3(p);
      const auto eq = check_thm6_equality(p);
      t4_ok = t4_ok && t4.pass;
      t3_ok = t3_ok && t3.pass;
      if (t3.applicable) ++t3_applicable;
      if (eq.equality_case) ++equality_cases;
      t6_ok = t6_ok && eq.consistent;
    }
  }
  const bool pass = claims_ok && t4_ok && t3_ok && t6_ok;
  Json j;
  j["d"] = cat.d;
  j["classes"] = cat.classes.size();
  j["pairs_audited"] = audited;
  j["bd_choices"] = choices;
  j["claims_pass"] = claims_ok;
  j["claim_failures"] = failures;
  j["bounds"] = {{"thm4_pass", t4_ok},
                 {"thm3_applicable", t3_applicable},
                 {"thm3_pass", t3_ok},
                 {"equality_cases", equality_cases},
                 {"equality_consistent", t6_ok}};
  j["pass"] = pass;
  emit(out_path, dump(j), out);
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct LemmaArgs {
  bool all = false;
  std::size_t d = 6;
  std::vector<std::string> only;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  std::size_t bases = 100;
  std::string out;
};

int cmd_lemmas(const LemmaArgs& a, std::ostream& out) {
  static const std::vector<std::string> kOracles{"inequality2", "binom", "lemma1", "lemma2", "lemslice", "lemma3"};
  for (const auto& name : a.only)
    if (std::find(kOracles.begin(), kOracles.end(), name) == kOracles.end())
      throw BadParameter("unknown oracle: " + name);
  auto selected = [&](const std::string& name) {
    return a.all || a.only.empty() || std::find(a.only.begin(), a.only.end(), name) != a.only.end();
  };
  const std::size_t d = a.d;
  if (d < 1) throw BadParameter("--dim must be positive");

  bool pass = true;
  Json reports = Json::object();
  if (selected("inequality2")) {
    const auto r = check_inequality2(std::max<std::size_t>(d, 2));
    pass = pass && r.pass();
    reports["inequality2"] = oracle_json(r);
  }
  if (selected("binom")) {
    const auto r = check_binom_bound(std::max<std::size_t>(d, 3));
    pass = pass && r.pass();
    reports["binom"] = oracle_json(r);
  }
  if (selected("lemma1")) {
    Json arr = Json::array();
    for (std::size_t k = 3; k <= std::min<std::size_t>(d, 13); ++k) {
      const auto r = check_lemma1(k);
      pass = pass && r.pass();
      arr.push_back({{"d", k},
                     {"direct", r.direct},
                     {"pairs_checked", r.pairs_checked},
                     {"max_count", r.max_count},
                     {"bound_times_eight", r.bound_times_eight},
                     {"violations", r.violations.size()},
                     {"formula_mismatches", r.formula_mismatches.size()},
                     {"pass", r.pass()}});
    }
    reports["lemma1"] = arr;
  }
  if (selected("lemma2")) {
    Json arr = Json::array();
    for (std::size_t k = 2; k <= std::min<std::size_t>(d, 7); ++k) {
      const auto r = check_lemma2(k);
      pass = pass && r.pass();
      arr.push_back({{"d", k}, {"families", r.families}, {"matches_expected", r.matches}, {"pass", r.pass()}});
    }
    reports["lemma2"] = arr;
  }
  if (selected("lemslice")) {
    Json arr = Json::array();
    for (std::size_t k = 1; k <= std::min<std::size_t>(d, 20); ++k) {
      const auto r = k <= 3 ? check_lemslice_exhaustive(k) : check_lemslice_random(k, a.seed + k, a.trials);
      arr.push_back({{"d", k}, {"exhaustive", r.exhaustive}, {"sets_checked", r.sets_checked}, {"tight", r.tight}});
    }
    reports["lemslice"] = arr;
  }
  if (selected("lemma3")) {
    Json arr = Json::array();
    for (std::size_t k = 1; k <= d; ++k) {
      std::size_t passed = 0;
      for (std::size_t i = 0; i < a.bases; ++i)
        if (verify_lemma3(random_rational_basis(k, a.seed * 1000003 + k * 1009 + i)).pass) ++passed;
      pass = pass && passed == a.bases;
      arr.push_back({{"d", k}, {"bases", a.bases}, {"passed", passed}});
    }
    reports["lemma3"] = arr;
  }
  Json j{{"d", d}, {"seed", a.seed}, {"reports", reports}, {"pass", pass}};
  emit(a.out, dump(j), out);
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::vector<std::string> catalogs;
  std::vector<std::string> slacks;
  std::size_t d = 0;
  std::size_t constructed = 0;
  std::string out;
};

Json conjecture_json(const ConjectureReport& r) {
  Json bad = Json::array();
  for (const auto& v : r.violations)
    bad.push_back({{"size_a", v.size_a}, {"size_b", v.size_b}, {"k", v.k}, {"product", v.product}, {"bound", v.bound}});
  return {{"d", r.d},
          {"pairs_checked", r.pairs_checked},
          {"implications_tested", r.implications_tested},
          {"violations", bad},
          {"pass", r.pass()}};
}

std::vector<ProductMatrix> load_slacks(const std::string& path) {
  std::vector<std::string> files;
  if (path != "-" && fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<ProductMatrix> out;
  for (const auto& f : files) {
    const Json j = parse_json_text(read_text(f), f);
    if (j.is_array()) {
      for (const auto& m : j) out.push_back(matrix_from_json(m));
    } else {
      out.push_back(matrix_from_json(j));
    }
  }
  return out;
}

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  if (a.catalogs.empty() && a.slacks.empty() && a.constructed == 0)
    throw BadParameter("nothing to audit: give --catalog, --slacks or --constructed");
  if (!a.slacks.empty() && a.d == 0) throw BadParameter("--slacks needs --dim");
  bool pass = true;
  Json j;

  Json cats = Json::array();
  for (const auto& path : a.catalogs) {
    const Catalog cat = load_catalog(path);
    const auto s = stats(cat);
    const auto r = check_conjecture1({s.achievable.begin(), s.achievable.end()}, cat.d);
    pass = pass && r.pass();
    Json rj = conjecture_json(r);
    rj["source"] = path;
    cats.push_back(rj);
  }
  j["catalogs"] = cats;

  Json slack_reports = Json::array();
  for (const auto& path : a.slacks) {
    const auto r = audit_conjecture_on_slacks(load_slacks(path), a.d);
    pass = pass && r.pass();
    Json rj = conjecture_json(r);
    rj["source"] = path;
    slack_reports.push_back(rj);
  }
  j["slacks"] = slack_reports;

  Json built = Json::array();
  for (std::size_t d = 2; d <= a.constructed; ++d) {
    std::vector<ProductMatrix> slacks;
    for (auto kind : {PolytopeKind::suspension_cube, PolytopeKind::cross_x_segment, PolytopeKind::cube,
                      PolytopeKind::cross, PolytopeKind::simplex, PolytopeKind::prism})
      slacks.push_back(construct_polytope(kind, d).slack);
    const auto r = audit_conjecture_on_slacks(slacks, d);
    pass = pass && r.pass();
    built.push_back(conjecture_json(r));
  }
  j["constructed"] = built;
  j["pass"] = pass;
  emit(a.out, dump(j), out);
  return pass ? kPass : kCheckFailed;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for families of vectors with binary scalar products and 2-level polytopes", "bsp"};
  app.require_subcommand(1);
  std::function<int()> action;

  EnumerateArgs en;
  auto* sub = app.add_subcommand("enumerate", "Catalog of closed spanning pairs up to isomorphism (JSONL)");
  sub->add_option("-d,--dim", en.d, "Dimension (1..6)")->required();
  sub->add_option("--out", en.out, "Catalog file; stdout when omitted");
  sub->add_option("--workers", en.workers, "Worker threads (BSP_WORKERS overrides)");
  sub->add_option("--checkpoint", en.checkpoint, "Checkpoint file, resumed when present");
  sub->add_option("--checkpoint-interval", en.checkpoint_interval, "Seconds between checkpoint writes");
  sub->add_option("--time-limit", en.time_limit, "Stop after this many seconds (incomplete run exits 2)");
  sub->add_flag("--progress", en.progress, "Print progress to stderr");
  sub->callback([&] { action = [&] { return cmd_enumerate(en, out, err); }; });

  StatsArgs st;
  sub = app.add_subcommand("stats", "Size statistics of a catalog");
  sub->add_option("catalog", st.catalog, "Catalog JSONL file or -")->required();
  sub->add_option("--out", st.out, "Report file; stdout when omitted");
  sub->add_flag("--csv", st.csv, "Write CSV instead of JSON");
  sub->add_option("--csv-set", st.csv_set, "Rows of the CSV")
      ->check(CLI::IsMember({"maximal", "achievable", "closed", "min-product"}));
  sub->add_option("--svg", st.svg, "Scatter plot of achievable sizes");
  sub->add_option("--svg-min", st.svg_min, "Scatter plot of (smaller size, product)");
  sub->add_option("--reference", st.reference, "Reference size list; mismatches exit 2");
  sub->callback([&] { action = [&] { return cmd_stats(st, out); }; });

  std::string vp_input, vp_out;
  sub = app.add_subcommand("verify-pair", "Check a pair of families and the product bounds");
  sub->add_option("pair", vp_input, "Pair JSON file or -")->required();
  sub->add_option("--out", vp_out, "Report file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_verify_pair(vp_input, vp_out, out); }; });

  std::string ex_kind, ex_out;
  std::size_t ex_d = 0;
  std::optional<std::size_t> ex_k;
  sub = app.add_subcommand("example", "Print an extremal pair as JSON");
  sub->add_option("--kind", ex_kind, "cube-pair, example3, example4 or example5")->required();
  sub->add_option("-d,--dim", ex_d, "Dimension")->required();
  sub->add_option("-k", ex_k, "Parameter of example5");
  sub->add_option("--out", ex_out, "Output file; stdout when omitted");
  sub->callback([&] {
    action = [&] {
      emit(ex_out, dump(to_json(construct_example(parse_example_kind(ex_kind), ex_d, ex_k))), out);
      return int{kPass};
    };
  });

  PolytopeArgs pc, pe;
  auto* poly = app.add_subcommand("polytope", "2-level polytope tools");
  poly->require_subcommand(1);
  sub = poly->add_subcommand("check", "Facets, 2-levelness, special shape and bounds of a vertex list");
  sub->add_option("vertices", pc.input, "Vertex JSON {\"d\", \"vertices\"} or -")->required();
  sub->add_option("--method", pc.method, "Facet enumeration: auto, subsets or dd")
      ->check(CLI::IsMember({"auto", "subsets", "dd"}));
  sub->add_option("--out", pc.out, "Report file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_polytope_check(pc, out); }; });
  sub = poly->add_subcommand("example", "Print the vertices of a constructed polytope");
  sub->add_option("--kind", pe.kind, "suspension-cube, cross-x-segment, cube, cross, simplex or prism")->required();
  sub->add_option("-d,--dim", pe.d, "Dimension")->required();
  sub->add_option("--out", pe.out, "Output file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_polytope_example(pe, out); }; });

  std::string au_catalog, au_out;
  sub = app.add_subcommand("audit", "Decomposition claims and bounds for every pair of a catalog");
  sub->add_option("catalog", au_catalog, "Catalog JSONL file or -")->required();
  sub->add_option("--out", au_out, "Report file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_audit(au_catalog, au_out, out); }; });

  LemmaArgs lm;
  sub = app.add_subcommand("lemmas", "Brute-force checks of the auxiliary inequalities and lemmas");
  sub->add_flag("--all", lm.all, "Run every oracle (the default when --only is absent)");
  sub->add_option("-d,--dim", lm.d, "Largest parameter for each oracle");
  sub->add_option("--only", lm.only, "inequality2, binom, lemma1, lemma2, lemslice or lemma3");
  sub->add_option("--seed", lm.seed, "Seed for the randomized checks");
  sub->add_option("--trials", lm.trials, "Random sets per dimension for lemslice");
  sub->add_option("--bases", lm.bases, "Random bases per dimension for lemma3");
  sub->add_option("--out", lm.out, "Report file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_lemmas(lm, out); }; });

  ConjectureArgs cj;
  sub = app.add_subcommand("conjecture", "Product bound conjecture on catalogs and slack matrices");
  sub->add_option("--catalog", cj.catalogs, "Catalog JSONL files");
  sub->add_option("--slacks", cj.slacks, "Slack matrix JSON files or directories");
  sub->add_option("-d,--dim", cj.d, "Dimension of the slack matrices");
  sub->add_option("--constructed", cj.constructed, "Also audit the built-in polytopes for d = 2..N");
  sub->add_option("--out", cj.out, "Report file; stdout when omitted");
  sub->callback([&] { action = [&] { return cmd_conjecture(cj, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    print_error(err, "UsageError", e.what());
    return kUsageOrIo;
  }

  try {
    return action();
  } catch (const CounterexampleFound& e) {
    print_error(err, e.kind(), e.what());
    return kCheckFailed;
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return kUsageOrIo;
  } catch (const IoError& e) {
    print_error(err, "IoError", e.what());
    return kUsageOrIo;
  } catch (const std::exception& e) {
    print_error(err, "Error", e.what());
    return kUsageOrIo;
  }
}

}  // namespace bsp::cli
