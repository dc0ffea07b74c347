#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnsym/exponents.hpp"
#include "gnsym/families.hpp"
#include "gnsym/spectral.hpp"

namespace gnsym {

// ---- GN quotient ----------------------------------------------------------

// ||u||_q / (||P1(D)u||_{r1}^{1-kappa} ||P2(D)u||_{r2}^kappa) with concrete symbols.
struct GnSetup {
  SymbolSpec p1 = SymbolSpec::identity();
  SymbolSpec p2 = SymbolSpec::identity();
  SymbolProfile profile;  // exponent bookkeeping for predicted slopes
  RecipExponent iq, ir1, ir2;
};
// P1 = |xi|^s - 1, P2 = identity, r1 = r2 = r.
GnSetup sphere_setup(int d, const Rat& s, const Rat& kappa, const RecipExponent& ir, const RecipExponent& iq);
// Symbols with the vanishing orders and growth of `profile` on the unit sphere (d >= 2) or at
// the points +-1 (d = 1): P_i = |(|xi| - 1)|^{alpha_i} <xi>^{s_i - alpha_i}, signed when alpha_i = 1.
GnSetup setup_from_profile(const SymbolProfile& profile, const RecipExponent& iq, const RecipExponent& ir1,
                           const RecipExponent& ir2);

enum class Family { Knapp, Dilated, Annulus, Random, Custom };
std::string to_string(Family f);

struct QuotientSample {
  Family family = Family::Custom;
  double parameter = 0.0;  // delta, R or seed
  double quotient = 0.0;
  double norm_u = 0.0;   // ||u||_q
  double norm_p1 = 0.0;  // ||P1 u||_{r1}
  double norm_p2 = 0.0;  // ||P2 u||_{r2}
  double recompute(const Rat& kappa) const;
};

// Throws std::domain_error("denominator degenerate") when a weighted denominator vanishes.
QuotientSample gn_quotient(const GridFunction& u, const GnSetup& setup, Family family = Family::Custom,
                           double parameter = 0.0);

// ---- operator norms and dyadic fits ----------------------------------------

enum class Consistency { Consistent, Inconsistent };
std::string to_string(Consistency v);

struct SlopeReport {
  std::string experiment;
  std::string kind;  // "opnorm", "kernel", "quotient"
  std::vector<double> abscissae;
  std::vector<double> ordinates;
  std::vector<QuotientSample> samples;
  std::vector<std::optional<double>> upper;  // Young bounds next to opnorm samples
  double fitted_slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  Rat predicted{0};
  double tolerance = 0.05;
  Consistency verdict = Consistency::Inconsistent;
  bool untight_probe = false;
  std::optional<Status> checker_status;  // exact checker verdict for the same exponents
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> notes;
};

struct LineFit {
  double slope = 0.0, intercept = 0.0, residual_rms = 0.0;
};
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

// "identity", "annulus" (eta(2^j|xi|)) or "slab" (eta(2^j(|xi| - 1))).
struct ProjectorSpec {
  std::string id = "slab";
  Grid grid;
};
cvec projector_multiplier(const ProjectorSpec& p, int j);

struct OpNormEstimate {
  double lower = 0.0;
  std::optional<double> upper;  // Young: ||K||_t with 1/t = 1 + 1/q - 1/p
  std::string witness;
};
// Max of ||Tu||_q / ||u||_p over deterministic probes and `ensemble` random band-limited inputs.
OpNormEstimate estimate_opnorm(const ProjectorSpec& p, int j, double ip, double iq, int ensemble, std::uint64_t seed);

struct DyadicConfig {
  std::string projector = "slab";
  int d = 2;
  int n = 512;
  double L = 400.0;
  int j_lo = 2, j_hi = 6;
  RecipExponent ip{Rat(1, 2)}, iq{Rat(1, 6)};
  int ensemble = 4;
  std::uint64_t seed = 1;
  double tolerance = 0.05;
  // Fit kernel norms ||K_j||_r instead of operator norms.
  std::optional<RecipExponent> kernel_ir;
};
// Annulus fits run on matched grids L_j = 2^j L, so the dilation identity is exact on the grid.
SlopeReport fit_dyadic_decay(const DyadicConfig& cfg);

// ---- slope experiments ------------------------------------------------------

struct SlopeConfig {
  Family family = Family::Knapp;
  std::vector<double> parameters;  // delta values (Knapp, Annulus) or R values (Dilated)
  double tolerance = 0.05;
  int d = 2;
};
// Predicted slope of log2 Q against log2(1/delta) or log2 R, from support and amplitude counting.
Rat predicted_quotient_slope(Family f, const SymbolProfile& p, const RecipExponent& iq, const RecipExponent& ir1,
                             const RecipExponent& ir2);
SlopeReport slope_experiment(const SlopeConfig& cfg, const GnSetup& setup);

// ---- extremizer search -------------------------------------------------------

struct ExtremizerConfig {
  Grid grid = Grid::make(1, 128, 16.0);
  double band_lo = 0.0, band_hi = 2.0;
  int restarts = 4;
  int iterations = 200;
  std::uint64_t seed = 1;
};
struct ExtremizerResult {
  double best = 0.0;
  double floor_value = 0.0;
  std::vector<std::size_t> support;  // centered-order frequency indices
  cvec coefficients;                 // u^ on the support
  std::vector<double> log;           // best-so-far after each step, non-decreasing
  std::uint64_t seed = 0;
  GridFunction function() const;
  Grid grid;
};
ExtremizerResult extremizer_search(const GnSetup& setup, const ExtremizerConfig& cfg);

// ---- kernel mass -------------------------------------------------------------

struct KernelMass {
  double coarse = 0.0, fine = 0.0, extrapolated = 0.0;
};
// h^d sum |F^{-1} m| at n and 2n points (same L), with Richardson extrapolation of order 2.
KernelMass multiplier_kernel_l1(const SymbolSpec& m, const Grid& g);

// ---- weighted quotient condition -------------------------------------------

enum class Model { Wave, Schroedinger };
struct WeightedCheck {
  Verdict verdict;
  Rat scaling_exponent;  // must vanish for boundedness
  Rat integrand_exponent;
  bool converges = false;  // -1 < a < 1
  std::optional<double> integral;
  std::string note;
};
WeightedCheck weighted_quotient_check(Model model, int d, const Rat& kappa, const RecipExponent& iq);
// 2 int_0^1 (rho^a + rho^-a)/(1 + rho^2) d rho by tanh-sinh; equals the integral over the line.
double weighted_integral(double a);

}  // namespace gnsym
