#pragma once

#include <string>
#include <vector>

#include "gnsym/exponents.hpp"

namespace gnsym::cli {

struct DiagramSpec {
  std::string title;
  std::string x_label = "1/p";
  std::string y_label = "1/q";
  std::vector<RegionPolyline> polylines;
};

// SVG 1.1 unit-square diagram. Every vertex is drawn as a circle whose data-exact attribute
// carries the exact rational coordinates it was placed from.
std::string render_svg(const DiagramSpec& spec);

}  // namespace gnsym::cli
