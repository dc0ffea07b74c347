#include "gnsym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fft_internal.hpp"
#include "gnsym/parallel.hpp"

namespace gnsym {

namespace {

GridFunction frequency_view(const GridFunction& u, bool parallel) {
  return u.space == Space::Frequency ? u : detail::transform(u, true, parallel);
}

// Samples below this fraction of the peak are FFT round-off, not content.
constexpr double kOccupied = 1e-13;

// Zeroes round-off samples where m is not finite and throws if a genuinely occupied one remains.
void require_finite(GridFunction& uh, const cvec& m) {
  double top = 0.0;
  for (const auto& v : uh.samples) top = std::max(top, std::abs(v));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::isfinite(m[i].real()) && std::isfinite(m[i].imag())) continue;
    if (std::abs(uh.samples[i]) <= kOccupied * top) {
      uh.samples[i] = 0.0;
      continue;
    }
    const auto xi = uh.grid.xi_at(i);
    std::ostringstream os;
    os << "symbol is not finite at occupied frequency (";
    for (int a = 0; a < uh.grid.d; ++a) os << (a ? ", " : "") << xi[a];
    os << ")";
    throw std::domain_error(os.str());
  }
}

double radius(const std::array<double, 3>& xi, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
  return std::sqrt(r2);
}

double distance(const std::array<double, 3>& xi, const std::array<double, 3>& xi0, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += (xi[a] - xi0[a]) * (xi[a] - xi0[a]);
  return std::sqrt(r2);
}

void require_lp_input(const GridFunction& u, double ip) {
  if (u.space != Space::Physical) throw std::invalid_argument("lp_norm needs a physical-space function");
  if (!(ip >= 0.0 && ip <= 1.0)) throw std::invalid_argument("lp_norm needs 1/p in [0,1]");
}

}  // namespace

GridFunction to_frequency(const GridFunction& u) { return detail::transform(u, true, true); }
GridFunction to_physical(const GridFunction& u) { return detail::transform(u, false, true); }

GridFunction apply_multiplier_values(const GridFunction& u, const cvec& m) {
  GridFunction uh = frequency_view(u, true);
  if (m.size() != uh.samples.size()) throw std::invalid_argument("multiplier size does not match grid");
  require_finite(uh, m);
  par::for_each_index(m.size(), [&](std::size_t i) {
    if (uh.samples[i] != cplx(0.0)) uh.samples[i] *= m[i];
  });
  return detail::transform(uh, false, true);
}

GridFunction apply_multiplier(const GridFunction& u, const SymbolSpec& m) {
  return apply_multiplier_values(u, m.sample(u.grid));
}

double lp_norm(const GridFunction& u, double ip, bool weak) {
  require_lp_input(u, ip);
  const std::size_t n = u.samples.size();
  const double top = par::blocked_max(n, [&](std::size_t i) { return std::abs(u.samples[i]); });
  if (weak) {
    if (ip == 0.0 || ip == 1.0) throw std::invalid_argument("weak norm needs 1 < q < inf");
    std::vector<double> a(n);
    par::for_each_index(n, [&](std::size_t i) { a[i] = std::abs(u.samples[i]); });
    std::sort(a.begin(), a.end(), std::greater<>());
    const double cell = u.grid.cell_x();
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, a[k] * std::pow(cell * static_cast<double>(k + 1), ip));
    return best;
  }
  if (ip == 0.0 || top == 0.0) return top;
  const double p = 1.0 / ip;
  const double sum = par::blocked_sum(n, [&](std::size_t i) { return std::pow(std::abs(u.samples[i]) / top, p); });
  return top * std::pow(u.grid.cell_x() * sum, ip);
}

double lp_norm(const GridFunction& u, const RecipExponent& ip, bool weak) {
  return lp_norm(u, to_double(ip.value()), weak);
}

double frequency_l2(const GridFunction& uh) {
  if (uh.space != Space::Frequency) throw std::invalid_argument("frequency_l2 needs frequency samples");
  const double sum = par::blocked_sum(uh.samples.size(), [&](std::size_t i) { return std::norm(uh.samples[i]); });
  return std::sqrt(uh.grid.cell_xi() * sum);
}

namespace ref {

double lp_norm(const GridFunction& u, double ip) {
  require_lp_input(u, ip);
  double top = 0.0;
  for (const auto& v : u.samples) top = std::max(top, std::abs(v));
  if (ip == 0.0 || top == 0.0) return top;
  const double p = 1.0 / ip;
  double sum = 0.0;
  for (const auto& v : u.samples) sum += std::pow(std::abs(v) / top, p);
  return top * std::pow(u.grid.cell_x() * sum, ip);
}

GridFunction apply_multiplier(const GridFunction& u, const SymbolSpec& m) {
  GridFunction uh = frequency_view(u, false);
  cvec vals;
  if (m.kind() == SymbolSpec::Kind::Tabulated || m.kind() == SymbolSpec::Kind::Product) {
    vals = m.sample(uh.grid);
  } else {
    vals.resize(uh.samples.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = m.at(uh.grid.xi_at(i), uh.grid.d);
  }
  require_finite(uh, vals);
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (uh.samples[i] != cplx(0.0)) uh.samples[i] *= vals[i];
  return detail::transform(uh, false, false);
}

}  // namespace ref

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x), b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

double BumpProfile::theta(double t) const { return smooth_step(2.0 - std::abs(t)); }

double BumpProfile::eta(double t) const { return theta(t) - theta(2.0 * t); }

void CutoffTau::validate() const {
  if (!(0.0 < rho_in && rho_in < rho_out && rho_out < 1.0))
    throw std::invalid_argument("cutoff needs 0 < rho_in < rho_out < 1");
}

double CutoffTau::operator()(double r) const {
  return smooth_step((rho_out - std::abs(r - 1.0)) / (rho_out - rho_in));
}

cvec dyadic_multiplier(const Grid& g, int j, const std::array<double, 3>& xi0, const BumpProfile& eta) {
  cvec m(g.size());
  const double scale = std::ldexp(1.0, j);
  par::for_each_index(m.size(), [&](std::size_t i) { m[i] = eta.eta(scale * distance(g.xi_at(i), xi0, g.d)); });
  return m;
}

Projected dyadic_projector(const GridFunction& u, int j, const std::array<double, 3>& xi0, const BumpProfile& eta) {
  const cvec m = dyadic_multiplier(u.grid, j, xi0, eta);
  const bool empty = std::all_of(m.begin(), m.end(), [](const cplx& v) { return v == cplx(0.0); });
  if (empty) return {GridFunction::zeros(u.grid, Space::Physical), true};
  return {apply_multiplier_values(u, m), false};
}

std::pair<int, int> resolvable_dyadic_range(const Grid& g, const std::array<double, 3>& xi0) {
  double tmin = INFINITY, tmax = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = distance(g.xi_at(i), xi0, g.d);
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  if (tmin == 0.0) throw std::invalid_argument("dyadic centre coincides with a frequency sample");
  // sum_{j=a}^{b} eta(2^j t) = theta(2^a t) - theta(2^{b+1} t) is 1 for t in [2^{-b}, 2^{-a}].
  const int a = static_cast<int>(std::floor(-std::log2(tmax)));
  const int b = static_cast<int>(std::ceil(-std::log2(tmin)));
  return {a, b};
}

void require_slab_resolvable(const Grid& g, int j) {
  const double w = std::ldexp(1.0, -j);
  if (w < g.dxi())
    throw std::invalid_argument("slab width 2^-" + std::to_string(j) + " is below the frequency spacing; refine the grid");
  if (2.0 * w >= g.xi_extent()) throw std::invalid_argument("slab wider than the frequency window");
}

cvec slab_multiplier(const Grid& g, int j, const BumpProfile& eta, std::optional<double> point) {
  if (point && g.d != 1) throw std::invalid_argument("point slabs are one-dimensional");
  cvec m(g.size());
  const double scale = std::ldexp(1.0, j);
  par::for_each_index(m.size(), [&](std::size_t i) {
    const auto xi = g.xi_at(i);
    const double dist = point ? xi[0] - *point : radius(xi, g.d) - 1.0;
    m[i] = eta.eta(scale * dist);
  });
  return m;
}

GridFunction slab_projector(const GridFunction& u, int j, const BumpProfile& eta, std::optional<double> point) {
  require_slab_resolvable(u.grid, j);
  return apply_multiplier_values(u, slab_multiplier(u.grid, j, eta, point));
}

GridFunction kernel_of(const Grid& g, const cvec& m) {
  if (m.size() != g.size()) throw std::invalid_argument("multiplier size does not match grid");
  GridFunction k = detail::transform({g, Space::Frequency, m}, false, true);
  const double c = std::pow(2.0 * std::numbers::pi, -0.5 * g.d);
  for (auto& v : k.samples) v *= c;
  return k;
}

std::pair<GridFunction, GridFunction> split_frequencies(const GridFunction& u, const CutoffTau& tau) {
  tau.validate();
  GridFunction uh = frequency_view(u, true);
  GridFunction h1 = uh, h2 = uh;
  par::for_each_index(uh.samples.size(), [&](std::size_t i) {
    const double t = tau(radius(uh.grid.xi_at(i), uh.grid.d));
    h1.samples[i] = t * uh.samples[i];
    // Computed as the remainder so that h1 + h2 = uh holds sample by sample.
    h2.samples[i] = uh.samples[i] - h1.samples[i];
  });
  return {to_physical(h1), to_physical(h2)};
}

}  // namespace gnsym
