#include "gnsym/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gnsym {

Grid Grid::make(int d, int n, double L) { return around(d, n, L, {0.0, 0.0, 0.0}); }

Grid Grid::around(int d, int n, double L, std::array<double, 3> center) {
  Grid g;
  g.d = d;
  g.n = n;
  g.L = L;
  g.validate();
  for (int a = 0; a < 3; ++a) g.xi_shift[a] = a < d ? center[a] + 0.5 * g.dxi() : 0.0;
  return g;
}

double Grid::dxi() const { return std::numbers::pi / L; }

double Grid::cell_x() const { return std::pow(h(), d); }

double Grid::cell_xi() const { return std::pow(dxi(), d); }

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int a = 0; a < d; ++a) s *= static_cast<std::size_t>(n);
  return s;
}

std::array<int, 3> Grid::unflatten(std::size_t flat) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = d - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % static_cast<std::size_t>(n));
    flat /= static_cast<std::size_t>(n);
  }
  return idx;
}

std::array<double, 3> Grid::xi_at(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int a = 0; a < d; ++a) out[a] = xi(a, idx[a]);
  return out;
}

std::array<double, 3> Grid::x_at(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int a = 0; a < d; ++a) out[a] = x(idx[a]);
  return out;
}

void Grid::validate() const {
  if (d < 1 || d > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
  if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("grid n must be a power of two >= 8");
  if (!(L > 0) || !std::isfinite(L)) throw std::invalid_argument("grid half-width L must be positive");
}

bool Grid::same_as(const Grid& o) const { return d == o.d && n == o.n && L == o.L && xi_shift == o.xi_shift; }

}  // namespace gnsym
