#include "bsp/examples.hpp"

#include <string>

#include "bsp/errors.hpp"

namespace bsp {

ExampleKind parse_example_kind(std::string_view name) {
  if (name == "cube-pair") return ExampleKind::cube_pair;
  if (name == "example3") return ExampleKind::example3;
  if (name == "example4") return ExampleKind::example4;
  if (name == "example5") return ExampleKind::example5;
  throw BadParameter("unknown example kind '" + std::string(name) + "'");
}

std::string_view to_string(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::cube_pair: return "cube-pair";
    case ExampleKind::example3: return "example3";
    case ExampleKind::example4: return "example4";
    case ExampleKind::example5: return "example5";
  }
  return "?";
}

namespace {

// Example 5 family; k = 0 is the cube pair. Coordinates are 0-based here.
BspPair general_cube_pair(std::size_t d, std::size_t k) {
  std::vector<QVector> a, b;
  for (unsigned long long m = 0; m < (1ULL << (d - k)); ++m) a.push_back(QVector::from_mask(d, m << k));
  for (std::size_t i = 0; i < k; ++i) a.push_back(QVector::unit(d, i));
  for (unsigned long long m = 0; m < (1ULL << k); ++m) {
    b.push_back(QVector::from_mask(d, m));
    for (std::size_t j = k; j < d; ++j) b.push_back(QVector::from_mask(d, m | (1ULL << j)));
  }
  return {d, VectorFamily(d, std::move(a)), VectorFamily(d, std::move(b))};
}

BspPair example3(std::size_t d) {
  std::vector<QVector> a, b;
  for (unsigned long long m = 0; m < (1ULL << (d - 1)); ++m) a.push_back(QVector::from_mask(d, m << 1));
  a.push_back(QVector::unit(d, 0));
  for (std::size_t j = 1; j < d; ++j) {
    b.push_back(QVector::unit(d, j));
    b.push_back(QVector::from_mask(d, 1ULL | (1ULL << j)));
  }
  b.push_back(QVector::unit(d, 0));
  b.push_back(QVector::zero(d));
  return {d, VectorFamily(d, std::move(a)), VectorFamily(d, std::move(b))};
}

BspPair example4(std::size_t d) {
  std::vector<QVector> a, b;
  for (unsigned long long m = 0; m < (1ULL << (d - 1)); ++m) {
    QVector v(d);
    for (std::size_t i = 0; i + 1 < d; ++i) v[i] = ((m >> i) & 1) ? 1 : -1;
    v[d - 1] = 1;
    a.push_back(std::move(v));
  }
  a.push_back(QVector::zero(d));
  const Rational half(1, 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (int eps : {-1, 1}) {
      QVector v(d);
      v[d - 1] = half;
      v[i] += Rational(eps) * half;
      b.push_back(std::move(v));
    }
  }
  return {d, VectorFamily(d, std::move(a)), VectorFamily(d, std::move(b))};
}

}  // namespace

BspPair construct_example(ExampleKind kind, std::size_t d, std::optional<std::size_t> k) {
  if (d == 0 || d > 20) throw BadParameter("dimension must lie in [1, 20], got " + std::to_string(d));
  switch (kind) {
    case ExampleKind::cube_pair: return general_cube_pair(d, 0);
    case ExampleKind::example3: return example3(d);
    case ExampleKind::example4: return example4(d);
    case ExampleKind::example5:
      if (!k) throw BadParameter("example5 needs k");
      if (*k > d) throw BadParameter("k must lie in [0, d]");
      return general_cube_pair(d, *k);
  }
  throw BadParameter("unknown example kind");
}

}  // namespace bsp
