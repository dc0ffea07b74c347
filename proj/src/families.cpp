#include "gnsym/families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gnsym/parallel.hpp"
#include "gnsym/spectral.hpp"

namespace gnsym {

namespace {

double radius(const std::array<double, 3>& xi, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
  return std::sqrt(r2);
}

// Lower and upper frequency bound of the window along `axis`.
std::pair<double, double> window(const Grid& g, int axis) {
  return {g.xi(axis, 0), g.xi(axis, g.n - 1)};
}

GridFunction normalized_physical(GridFunction uh) {
  const double norm = frequency_l2(uh);
  if (norm == 0.0) throw std::invalid_argument("test function has no frequency samples on this grid");
  for (auto& v : uh.samples) v /= norm;
  return to_physical(uh);
}

void require_shell_resolved(const Grid& g, double delta) {
  if (!(delta > 0.0 && delta < 0.25)) throw std::invalid_argument("delta must lie in (0, 1/4)");
  if (delta < 4.0 * g.dxi())
    throw std::invalid_argument("delta = " + std::to_string(delta) + " is below 4 frequency spacings; refine the grid");
}

}  // namespace

double bump(double t) {
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

GridFunction knapp_cap(const Grid& g, double delta) {
  require_shell_resolved(g, delta);
  const double width = std::sqrt(delta);
  const auto [lo, hi] = window(g, 0);
  const double inner = g.d == 1 ? 1.0 - delta : (1.0 - delta) * std::cos(width);
  if (inner <= lo || 1.0 + delta >= hi) throw std::invalid_argument("Knapp cap does not fit the frequency window");
  for (int a = 1; a < g.d; ++a) {
    const auto [l, h] = window(g, a);
    const double reach = (1.0 + delta) * std::sin(width);
    if (-reach <= l || reach >= h) throw std::invalid_argument("Knapp cap does not fit the frequency window");
  }
  GridFunction uh = GridFunction::zeros(g, Space::Frequency);
  par::for_each_index(g.size(), [&](std::size_t i) {
    const auto xi = g.xi_at(i);
    if (xi[0] <= 0.0) return;
    const double r = radius(xi, g.d);
    double v = bump((r - 1.0) / delta);
    if (g.d > 1 && v > 0.0) {
      double perp = 0.0;
      for (int a = 1; a < g.d; ++a) perp += xi[a] * xi[a];
      v *= bump(std::atan2(std::sqrt(perp), xi[0]) / width);
    }
    uh.samples[i] = v;
  });
  return normalized_physical(std::move(uh));
}

Grid knapp_grid(int d, double delta) {
  const double dxi = delta / 16.0;
  // Half-window must reach past the cap's angular extent with some room to spare.
  const double need = 1.25 * std::max(std::sqrt(delta), 2.0 * delta);
  int n = d == 3 ? 64 : 512;
  while (0.5 * n * dxi < need) n *= 2;
  if (n > 4096) throw std::invalid_argument("Knapp grid would need more than 4096 points per axis");
  const double L = std::numbers::pi / dxi;
  return Grid::around(d, n, L, {1.0, 0.0, 0.0});
}

GridFunction annulus_bump(const Grid& g, double delta) {
  require_shell_resolved(g, delta);
  for (int a = 0; a < g.d; ++a) {
    const auto [lo, hi] = window(g, a);
    if (-(1.0 + delta) <= lo || 1.0 + delta >= hi) throw std::invalid_argument("annulus does not fit the frequency window");
  }
  GridFunction uh = GridFunction::zeros(g, Space::Frequency);
  par::for_each_index(g.size(), [&](std::size_t i) { uh.samples[i] = bump((radius(g.xi_at(i), g.d) - 1.0) / delta); });
  return normalized_physical(std::move(uh));
}

GridFunction dilated_modulated_bump(const Grid& g, double R) {
  if (!(R >= 1.0)) throw std::invalid_argument("dilation R must be at least 1");
  // Gaussian of width R/8 around R e1: negligible beyond 2R in frequency and fast decay in x.
  if (2.0 * R > 0.9 * g.xi_extent()) throw std::invalid_argument("dilated bump does not fit the frequency window");
  GridFunction uh = GridFunction::zeros(g, Space::Frequency);
  const double inv_sigma = 8.0 / R;
  par::for_each_index(g.size(), [&](std::size_t i) {
    auto xi = g.xi_at(i);
    xi[0] -= R;
    const double t = radius(xi, g.d) * inv_sigma;
    uh.samples[i] = std::exp(-0.5 * t * t);
  });
  GridFunction u = to_physical(uh);
  if (boundary_mass_fraction(u) > kAliasingBudget)
    throw std::runtime_error("dilated bump fails the aliasing audit; enlarge L");
  return u;
}

Grid dilated_grid(int d, double R, int n, double L0) { return Grid::make(d, n, L0 / R); }

GridFunction random_band_limited(const Grid& g, std::uint64_t seed, double band_lo, double band_hi) {
  if (!(0.0 <= band_lo && band_lo < band_hi)) throw std::invalid_argument("band needs 0 <= lo < hi");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  GridFunction uh = GridFunction::zeros(g, Space::Frequency);
  // Serial on purpose: the draw order fixes the function.
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = radius(g.xi_at(i), g.d);
    if (r < band_lo || r > band_hi) continue;
    const double re = normal(rng);
    const double im = normal(rng);
    uh.samples[i] = {re, im};
  }
  return normalized_physical(std::move(uh));
}

double boundary_mass_fraction(const GridFunction& u) {
  if (u.space != Space::Physical) throw std::invalid_argument("aliasing audit needs physical samples");
  const Grid& g = u.grid;
  const double edge = g.L - g.L / 16.0;
  const std::size_t n = g.size();
  const double total = par::blocked_sum(n, [&](std::size_t i) { return std::norm(u.samples[i]); });
  const double shell = par::blocked_sum(n, [&](std::size_t i) {
    const auto x = g.x_at(i);
    for (int a = 0; a < g.d; ++a)
      if (std::abs(x[a]) >= edge) return std::norm(u.samples[i]);
    return 0.0;
  });
  return total == 0.0 ? 0.0 : shell / total;
}

std::size_t fourier_support_count(const GridFunction& u, double rel) {
  const GridFunction uh = u.space == Space::Frequency ? u : to_frequency(u);
  double top = 0.0;
  for (const auto& v : uh.samples) top = std::max(top, std::abs(v));
  std::size_t count = 0;
  for (const auto& v : uh.samples)
    if (std::abs(v) > rel * top) ++count;
  return count;
}

}  // namespace gnsym
