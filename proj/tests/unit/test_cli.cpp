#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "bsp/examples.hpp"
#include "bsp/io.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "svg.hpp"

namespace fs = std::filesystem;
using bsp::Json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "bsp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bsp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bsp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

// Compares with a stored golden file; BSP_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& text) {
  const fs::path golden = fs::path(BSP_GOLDEN_DIR) / name;
  if (std::getenv("BSP_UPDATE_GOLDEN")) spit(golden, text);
  REQUIRE(fs::exists(golden));
  CHECK(slurp(golden) == text);
}

const TempDir& tmp() {
  static TempDir t;
  return t;
}

const std::string& catalog4_path() {
  static const std::string path = [] {
    const auto p = tmp() / "cat4.jsonl";
    REQUIRE(call({"enumerate", "-d", "4", "--out", p}).code == 0);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("enumerate writes JSONL") {
  const auto r = call({"enumerate", "-d", "3"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = Json::parse(line);
    CHECK(j.at("d") == 3);
    ++n;
  }
  CHECK(n == 3);
  const auto s = Json::parse(call({"enumerate", "-d", "4", "--out", tmp() / "x.jsonl"}).out);
  CHECK(s.at("classes") == 16);
  CHECK(s.at("complete") == true);
}

TEST_CASE("incomplete enumeration exits 2") {
  const auto r = call({"enumerate", "-d", "4", "--time-limit", "1e-9", "--out", tmp() / "partial.jsonl"});
  CHECK(r.code == 2);
}

TEST_CASE("stats CSV lists the maximal pairs") {
  const auto r = call({"stats", catalog4_path(), "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "size_a,size_b\n5,16\n6,12\n7,10\n8,9\n9,8\n10,7\n12,6\n16,5\n");
  const auto j = Json::parse(call({"stats", catalog4_path()}).out);
  CHECK(j.at("max_product") == 80);
  CHECK(j.at("max_product_large") == 72);
  const auto mp = call({"stats", catalog4_path(), "--csv", "--csv-set", "min-product"});
  CHECK(mp.out.rfind("min_size,product\n", 0) == 0);
}

TEST_CASE("stats against a reference") {
  const auto ref = std::string(BSP_DATA_DIR) + "/maximal_d4.txt";
  const auto r = call({"stats", catalog4_path(), "--reference", ref});
  // The reference holds only the maximal pairs, so the achievable set differs.
  CHECK(r.code == 2);
  const auto j = Json::parse(r.out);
  CHECK(j.at("reference").at("match") == false);
  CHECK(j.at("reference").at("missing").empty());
}

TEST_CASE("plots are byte-stable") {
  const auto svg = tmp() / "sizes.svg", svg_min = tmp() / "min.svg";
  REQUIRE(call({"stats", catalog4_path(), "--svg", svg, "--svg-min", svg_min}).code == 0);
  check_golden("sizes_d4.svg", slurp(svg));
  check_golden("min_product_d4.svg", slurp(svg_min));
  bsp::cli::ScatterSpec empty{"Empty", "x", "y", {}, {}};
  check_golden("empty.svg", bsp::cli::emit_scatter(empty));
  CHECK(bsp::cli::emit_scatter(empty) == bsp::cli::emit_scatter(empty));
}

TEST_CASE("example piped into verify-pair") {
  const auto pair = tmp() / "ex3.json";
  REQUIRE(call({"example", "--kind", "example3", "-d", "5", "--out", pair}).code == 0);
  const auto r = call({"verify-pair", pair});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("product") == 170);
  CHECK(j.at("valid") == true);
  CHECK(j.at("bounds").at(1).at("equality") == true);
  // Round trip: the emitted pair parses back to the constructed one.
  CHECK(bsp::pair_from_json(Json::parse(slurp(pair))) ==
        bsp::construct_example(bsp::ExampleKind::example3, 5));
}

TEST_CASE("verify-pair reports a witness") {
  const auto pair = tmp() / "bad.json";
  spit(pair, R"({"d": 1, "a": {"d": 1, "vectors": [[1]]}, "b": {"d": 1, "vectors": [[2]]}})");
  const auto r = call({"verify-pair", pair});
  CHECK(r.code == 2);
  const auto j = Json::parse(r.out);
  CHECK(j.at("product") == 1);
  CHECK(j.at("witness").at("value") == "2");
}

TEST_CASE("errors go to stderr as JSON") {
  auto r = call({"verify-pair", tmp() / "missing.json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error") == "IoError");
  r = call({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error") == "UsageError");
  r = call({"example", "--kind", "nope", "-d", "3"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error") == "BadParameter");
  const auto broken = tmp() / "broken.json";
  spit(broken, "{");
  r = call({"verify-pair", broken});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error") == "ParseError");
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("polytope commands") {
  const auto v = tmp() / "susp.json";
  REQUIRE(call({"polytope", "example", "--kind", "suspension-cube", "-d", "4", "--out", v}).code == 0);
  for (const char* method : {"auto", "subsets", "dd"}) {
    const auto r = call({"polytope", "check", v, "--method", method});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("f0") == 10);
    CHECK(j.at("facets_count") == 12);
    CHECK(j.at("special") == "neither");
    CHECK(j.at("bounds").at(1).at("equality") == true);
  }
  const auto cube = tmp() / "cube.json";
  REQUIRE(call({"polytope", "example", "--kind", "cube", "-d", "3", "--out", cube}).code == 0);
  CHECK(Json::parse(call({"polytope", "check", cube}).out).at("special") == "cube");
  const auto not_vertex = tmp() / "nv.json";
  spit(not_vertex, R"({"d": 2, "vertices": [[0, 0], [2, 0], [0, 2], [1, 0]]})");
  CHECK(call({"polytope", "check", not_vertex}).code == 1);
}

TEST_CASE("audit, lemmas and conjecture") {
  const auto cat3 = tmp() / "cat3.jsonl";
  REQUIRE(call({"enumerate", "-d", "3", "--out", cat3}).code == 0);
  auto r = call({"audit", cat3});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("pairs_audited") == 6);

  r = call({"lemmas", "--all", "-d", "4", "--trials", "1000", "--bases", "5"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("pass") == true);
  CHECK(call({"lemmas", "--only", "nothing"}).code == 1);

  r = call({"conjecture", "--catalog", cat3, "--constructed", "5"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("constructed").size() == 4);

  const auto slacks = tmp() / "slacks.json";
  spit(slacks, R"([{"rows": 4, "cols": 4, "bits": ["1010", "1001", "0110", "0101"]}])");
  r = call({"conjecture", "--slacks", slacks, "-d", "2"});
  CHECK(r.code == 0);
  CHECK(call({"conjecture"}).code == 1);
}
