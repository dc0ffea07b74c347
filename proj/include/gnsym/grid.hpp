#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace gnsym {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

enum class Space { Physical, Frequency };

// Periodic box [-L, L)^d with n points per axis. Physical samples sit at x_i = -L + i h.
// Frequency samples sit at xi_m = xi_shift + m * dxi for m in [-n/2, n/2) and are stored in
// centered order (storage index m + n/2). The default shift of half a spacing keeps every
// sample off the unit sphere and off the origin.
struct Grid {
  int d = 1;
  int n = 64;
  double L = 16.0;
  std::array<double, 3> xi_shift{0.0, 0.0, 0.0};

  static Grid make(int d, int n, double L);
  // Frequency window centered at `center` (plus the half-spacing offset).
  static Grid around(int d, int n, double L, std::array<double, 3> center);

  double h() const { return 2.0 * L / n; }
  double dxi() const;
  double xi_extent() const { return 0.5 * n * dxi(); }  // half-width of the frequency window
  double cell_x() const;                                 // h^d
  double cell_xi() const;                                // dxi^d
  std::size_t size() const;

  double x(int i) const { return -L + i * h(); }
  double xi(int axis, int i) const { return xi_shift[axis] + (i - n / 2) * dxi(); }

  // Unpack a flat row-major index (axis 0 slowest) into per-axis indices.
  std::array<int, 3> unflatten(std::size_t flat) const;
  // Frequency vector at a flat centered-order index; unused axes are zero.
  std::array<double, 3> xi_at(std::size_t flat) const;
  std::array<double, 3> x_at(std::size_t flat) const;

  // Throws std::invalid_argument: n >= 8 even power of two, L > 0, d in {1,2,3}.
  void validate() const;
  bool same_as(const Grid& o) const;
};

struct GridFunction {
  Grid grid;
  Space space = Space::Physical;
  cvec samples;

  static GridFunction zeros(const Grid& g, Space s) { return {g, s, cvec(g.size())}; }
};

}  // namespace gnsym
