#pragma once

#include <string>

#include "gnsym/grid.hpp"

namespace gnsym {

// Binary layout: four little-endian 64-bit header fields (d, n, L as IEEE double bits, space
// flag 0 = physical / 1 = frequency), then n^d complex samples as (re, im) doubles.
// A JSON sidecar `<path>.json` records the same header plus the frequency shift.
void write_grid_function(const GridFunction& u, const std::string& path, const std::string& note = "");
// Reads the binary file; the shift comes from the sidecar when present, else the default.
GridFunction read_grid_function(const std::string& path);

}  // namespace gnsym
