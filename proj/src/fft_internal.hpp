#pragma once

#include "gnsym/grid.hpp"

namespace gnsym::detail {

// Unnormalized in-place DFT over all d axes; sign -1 is forward, +1 backward.
void fft_inplace(cvec& data, int d, int n, int sign);

// Grid transform with the phase and scaling conventions of Grid. `parallel` selects the
// OpenMP loops; the FFT itself is the same either way.
GridFunction transform(const GridFunction& u, bool to_frequency, bool parallel);

}  // namespace gnsym::detail
