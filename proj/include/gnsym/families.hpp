#pragma once

#include <cstdint>
#include <string>

#include "gnsym/grid.hpp"

namespace gnsym {

// exp(1 - 1/(1 - t^2)) on |t| < 1, zero outside; peak value 1 at t = 0.
double bump(double t);

// Cap {||xi| - 1| <= delta, angle(xi, e1) <= sqrt(delta)} smoothed by the bump in both
// directions. Physical space, unit L^2. Needs delta >= 4 dxi and the cap inside the window.
GridFunction knapp_cap(const Grid& g, double delta);
// Frequency window centered at e1 with dxi = delta/16, sized to hold the cap.
// Throws when that would need more than 4096 points per axis.
Grid knapp_grid(int d, double delta);

// Full shell ||xi| - 1| <= delta, smoothed. Physical space, unit L^2.
GridFunction annulus_bump(const Grid& g, double delta);

// u^ = exp(-|xi - R e1|^2 / (2 (R/8)^2)), so max |u^| = 1. Needs 2R inside the window and the
// physical function to clear the aliasing audit.
GridFunction dilated_modulated_bump(const Grid& g, double R);
// Grid on which dilated bumps of different R are exact rescalings of each other.
Grid dilated_grid(int d, double R, int n = 256, double L0 = 128.0);

// i.i.d. complex Gaussian coefficients on band_lo <= |xi| <= band_hi, unit L^2.
GridFunction random_band_limited(const Grid& g, std::uint64_t seed, double band_lo, double band_hi);

// Fraction of the L^2 mass in the outer shell of the box (last 1/16 of L on each side).
double boundary_mass_fraction(const GridFunction& u);
inline constexpr double kAliasingBudget = 1e-6;

// Number of frequency samples with |u^| above `rel` times its maximum.
std::size_t fourier_support_count(const GridFunction& u, double rel = 1e-12);

}  // namespace gnsym
