#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gnsym/exponents.hpp"
#include "gnsym/grid.hpp"
#include "gnsym/symbols.hpp"

namespace gnsym {

// Unitary transforms, (2pi)^{-d/2} normalization, sampled on the grid.
GridFunction to_frequency(const GridFunction& u);
GridFunction to_physical(const GridFunction& u);

// F^{-1}(m u^). Accepts either space, returns Physical. Throws std::domain_error if m is not
// finite at a frequency where |u^| exceeds 1e-13 of its peak; smaller samples count as round-off.
GridFunction apply_multiplier(const GridFunction& u, const SymbolSpec& m);
GridFunction apply_multiplier_values(const GridFunction& u, const cvec& m_centered);

// ||u||_p with ip = 1/p (ip = 0 is the max norm). weak = true gives the L^{q,infty} quasinorm
// sup_lambda lambda |{|u| > lambda}|^{1/q}, taken over the sample values as thresholds.
double lp_norm(const GridFunction& u, double ip, bool weak = false);
double lp_norm(const GridFunction& u, const RecipExponent& ip, bool weak = false);
// Weighted l^2 norm of the frequency samples; equals the physical L^2 norm by Plancherel.
double frequency_l2(const GridFunction& u_hat);

// Serial reference versions of the parallel kernels above, used by tests and the benchmark.
namespace ref {
double lp_norm(const GridFunction& u, double ip);
GridFunction apply_multiplier(const GridFunction& u, const SymbolSpec& m);
}  // namespace ref

// C-infinity step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x);

// eta(t) = theta(t) - theta(2t) with theta = 1 on [-1,1] and 0 off (-2,2), so that
// sum_j eta(2^j t) telescopes to 1 for t != 0.
struct BumpProfile {
  double theta(double t) const;
  double eta(double t) const;
};

// Radial cutoff equal to 1 on ||xi| - 1| <= rho_in and 0 on ||xi| - 1| >= rho_out.
struct CutoffTau {
  double rho_in = 0.25;
  double rho_out = 0.5;
  void validate() const;
  double operator()(double radius) const;
};

struct Projected {
  GridFunction u;
  bool outside_grid = false;  // the annulus missed every frequency sample
};

// Multiplier eta(2^j |xi - xi0|).
cvec dyadic_multiplier(const Grid& g, int j, const std::array<double, 3>& xi0, const BumpProfile& eta = {});
Projected dyadic_projector(const GridFunction& u, int j, const std::array<double, 3>& xi0,
                           const BumpProfile& eta = {});
// Smallest and largest j for which sum_j eta(2^j |xi - xi0|) = 1 on every sample.
std::pair<int, int> resolvable_dyadic_range(const Grid& g, const std::array<double, 3>& xi0);

// Multiplier eta(2^j (|xi| - 1)) around the unit sphere; with `point` set (d = 1 only) the
// slab sits around that single point instead.
cvec slab_multiplier(const Grid& g, int j, const BumpProfile& eta = {}, std::optional<double> point = {});
GridFunction slab_projector(const GridFunction& u, int j, const BumpProfile& eta = {},
                            std::optional<double> point = {});
// Throws when the slab is thinner than the frequency spacing or wider than the window.
void require_slab_resolvable(const Grid& g, int j);

// Convolution kernel of a multiplier: T u = K * u with K = (2pi)^{-d/2} F^{-1} m.
GridFunction kernel_of(const Grid& g, const cvec& m_centered);

std::pair<GridFunction, GridFunction> split_frequencies(const GridFunction& u, const CutoffTau& tau);

}  // namespace gnsym
