#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"

namespace knotkit {

struct GaussPass {
  int crossing = 0;  // crossing id (1-based in the text format)
  bool over = false;
  int sign = 0;  // +1 / -1

  bool operator==(const GaussPass&) const = default;
};

/// Sequential over/under encoding of an oriented projection. Components with
/// no crossings are carried as a count.
struct GaussCode {
  std::vector<std::vector<GaussPass>> components;
  int free_loops = 0;

  int component_count() const { return static_cast<int>(components.size()) + free_loops; }

  /// Text format: whitespace-separated tokens O<id><sign> / U<id><sign>,
  /// components separated by `;`. The empty text is the unknot.
  std::string to_text() const;
  static GaussCode from_text(const std::string& text);

  bool operator==(const GaussCode&) const = default;
};

GaussCode gauss_from_pd(const PlanarDiagram& d);

/// Rebuild a diagram from a signed code. Throws input_error when the code is
/// malformed or admits no planar realization.
PlanarDiagram pd_from_gauss(const GaussCode& g);

}  // namespace knotkit
