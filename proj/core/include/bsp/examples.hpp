#pragma once

#include <optional>
#include <string_view>

#include "bsp/family.hpp"

namespace bsp {

enum class ExampleKind { cube_pair, example3, example4, example5 };

/// "cube-pair", "example3", "example4", "example5". Throws BadParameter.
ExampleKind parse_example_kind(std::string_view name);
std::string_view to_string(ExampleKind kind);

/// Extremal constructions:
///  - cube_pair: A = {0,1}^d, B = {0, e_1, ..., e_d}.
///  - example3: A = {0,1}-combinations of e_2..e_d plus e_1; B = {d1 e_1 + e_j} with e_1, 0.
///  - example4: A = {e_d + sum eps_i e_i} with 0; B = {(e_d +- e_i)/2}.
///  - example5: the k-parametrized family; k = 0 gives the cube pair, sizes
///    (2^(d-k)+k, 2^k (d-k+1)).
/// Throws BadParameter for d = 0, d > 20, or k outside [0, d] (k is required only for example5).
BspPair construct_example(ExampleKind kind, std::size_t d, std::optional<std::size_t> k = {});

}  // namespace bsp
