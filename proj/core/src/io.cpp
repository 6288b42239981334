#include "bsp/io.hpp"

#include <fstream>
#include <iostream>

#include "bsp/errors.hpp"

namespace bsp {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const VectorFamily& f) {
  Json vecs = Json::array();
  for (const auto& v : f) vecs.push_back(to_json(v));
  Json j;
  j["d"] = f.dim();
  j["vectors"] = std::move(vecs);
  return j;
}

Json to_json(const BspPair& p) {
  Json j;
  j["d"] = p.dim;
  j["a"] = to_json(p.a);
  j["b"] = to_json(p.b);
  return j;
}

Json to_json(const ProductMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["bits"] = m.bit_rows();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

QVector vector_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("expected a vector array, got " + j.dump());
  if (j.size() != dim) {
    throw DimensionMismatch("vector of length " + std::to_string(j.size()) + " in dimension " +
                            std::to_string(dim));
  }
  QVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

namespace {

std::size_t read_dim(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer()) {
    throw ParseError("missing integer field \"d\"");
  }
  const auto d = j["d"].get<long>();
  if (d < 1) throw ParseError("dimension must be positive");
  return static_cast<std::size_t>(d);
}

}  // namespace

VectorFamily family_from_json(const Json& j) {
  const std::size_t d = read_dim(j);
  if (!j.contains("vectors") || !j["vectors"].is_array()) throw ParseError("missing array \"vectors\"");
  std::vector<QVector> vs;
  for (const auto& v : j["vectors"]) vs.push_back(vector_from_json(v, d));
  return VectorFamily(d, std::move(vs));
}

BspPair pair_from_json(const Json& j) {
  const std::size_t d = read_dim(j);
  if (!j.contains("a") || !j.contains("b")) throw ParseError("pair needs fields \"a\" and \"b\"");
  BspPair p{d, family_from_json(j["a"]), family_from_json(j["b"])};
  if (p.a.dim() != d || p.b.dim() != d) throw DimensionMismatch("family dimension differs from pair");
  return p;
}

ProductMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bits") || !j["bits"].is_array()) {
    throw ParseError("matrix needs an array field \"bits\"");
  }
  std::vector<std::string> rows;
  for (const auto& r : j["bits"]) {
    if (!r.is_string()) throw ParseError("bit rows must be strings");
    rows.push_back(r.get<std::string>());
  }
  auto m = ProductMatrix::from_bit_rows(rows);
  if (j.contains("rows") && j["rows"].get<std::size_t>() != m.rows()) {
    throw DimensionMismatch("\"rows\" disagrees with the bit rows");
  }
  if (j.contains("cols") && !rows.empty() && j["cols"].get<std::size_t>() != m.cols()) {
    throw DimensionMismatch("\"cols\" disagrees with the bit rows");
  }
  return m;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  if (path == "-") return read_json(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_json(in);
}

}  // namespace bsp
