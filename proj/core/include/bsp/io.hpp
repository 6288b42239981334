#pragma once

#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "bsp/family.hpp"
#include "bsp/product_matrix.hpp"

namespace bsp {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QVector& v);
/// {"d": int, "vectors": [[...], ...]}
Json to_json(const VectorFamily& f);
/// {"d": int, "a": family, "b": family}
Json to_json(const BspPair& p);
/// {"rows": m, "cols": n, "bits": ["0101", ...]}
Json to_json(const ProductMatrix& m);

// All parsers throw ParseError on malformed input and DimensionMismatch on
// inconsistent lengths. Rationals may be given as "p/q" strings or JSON integers.
Rational rational_from_json(const Json& j);
QVector vector_from_json(const Json& j, std::size_t dim);
VectorFamily family_from_json(const Json& j);
BspPair pair_from_json(const Json& j);
ProductMatrix matrix_from_json(const Json& j);

/// Reads one JSON document from a stream. Throws ParseError.
Json read_json(std::istream& in);
/// Reads "-" as stdin, otherwise a file. Throws std::runtime_error if unreadable.
Json read_json_file(const std::string& path);

}  // namespace bsp
