#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bsp::cli {

struct Overlay {
  enum class Kind { hyperbola, horizontal };
  Kind kind = Kind::hyperbola;
  std::int64_t value = 0;  ///< x*y = value, or y = value
  std::string label;
};

struct ScatterSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::vector<Overlay> overlays;
};

/// Self-contained SVG document. The output depends only on the spec.
std::string emit_scatter(const ScatterSpec& spec);

}  // namespace bsp::cli
