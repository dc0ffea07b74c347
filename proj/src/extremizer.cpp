#include <cmath>
#include <random>
#include <stdexcept>

#include "gnsym/verify.hpp"

namespace gnsym {

namespace {

double radius(const std::array<double, 3>& xi, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
  return std::sqrt(r2);
}

GridFunction from_coefficients(const Grid& g, const std::vector<std::size_t>& support, const cvec& c) {
  GridFunction uh = GridFunction::zeros(g, Space::Frequency);
  for (std::size_t i = 0; i < support.size(); ++i) uh.samples[support[i]] = c[i];
  return to_physical(uh);
}

// Degenerate candidates (all mass on the zero set) score 0 instead of aborting the search.
double score(const GnSetup& setup, const Grid& g, const std::vector<std::size_t>& support, const cvec& c) {
  try {
    return gn_quotient(from_coefficients(g, support, c), setup).quotient;
  } catch (const std::domain_error&) {
    return 0.0;
  } catch (const std::invalid_argument&) {
    return 0.0;
  }
}

}  // namespace

GridFunction ExtremizerResult::function() const { return from_coefficients(grid, support, coefficients); }

ExtremizerResult extremizer_search(const GnSetup& setup, const ExtremizerConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("extremizer budget needs at least one restart");
  if (cfg.iterations < 1) throw std::invalid_argument("extremizer budget needs at least one iteration per restart");
  const Grid& g = cfg.grid;
  ExtremizerResult res;
  res.grid = g;
  res.seed = cfg.seed;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = radius(g.xi_at(i), g.d);
    if (r >= cfg.band_lo && r <= cfg.band_hi) res.support.push_back(i);
  }
  if (res.support.empty()) throw std::invalid_argument("extremizer band contains no frequency samples");

  // Floor: a profile concentrated next to the unit sphere (one side of it in d = 1), evaluated
  // before any search so that the result can never fall below it.
  const double centre = (cfg.band_lo <= 1.0 && 1.0 <= cfg.band_hi) ? 1.0 : 0.5 * (cfg.band_lo + cfg.band_hi);
  const double width = 4.0 * g.dxi();
  cvec floor(res.support.size());
  for (std::size_t i = 0; i < res.support.size(); ++i) {
    const auto xi = g.xi_at(res.support[i]);
    if (xi[0] <= 0.0) continue;
    floor[i] = bump((radius(xi, g.d) - centre) / width);
  }
  res.floor_value = score(setup, g, res.support, floor);
  res.best = res.floor_value;
  res.coefficients = floor;

  for (int r = 0; r < cfg.restarts; ++r) {
    // Each restart owns its stream, so results do not depend on how restarts are scheduled.
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, res.support.size() - 1);

    // Restart 0 refines the floor profile; the others start from noise.
    cvec cur(res.support.size());
    for (auto& c : cur) {
      const double re = normal(rng);
      const double im = normal(rng);
      c = {re, im};
    }
    if (r == 0) cur = floor;
    double cur_val = score(setup, g, res.support, cur);
    const double t0 = 0.05 * std::max(cur_val, 1e-12);
    for (int it = 0; it < cfg.iterations; ++it) {
      const double frac = static_cast<double>(it) / cfg.iterations;
      const double step = 0.5 * std::pow(0.01, frac);
      const double temp = t0 * std::pow(1e-3, frac);
      double rms = 0.0;
      for (const auto& c : cur) rms += std::norm(c);
      rms = std::sqrt(rms / static_cast<double>(cur.size()));
      const std::size_t idx = pick(rng);
      const double re = normal(rng);
      const double im = normal(rng);
      cvec cand = cur;
      cand[idx] += step * std::max(rms, 1e-12) * cplx(re, im);
      const double val = score(setup, g, res.support, cand);
      const double u = unif(rng);
      if (val >= cur_val || u < std::exp((val - cur_val) / temp)) {
        cur = std::move(cand);
        cur_val = val;
      }
      if (cur_val > res.best) {
        res.best = cur_val;
        res.coefficients = cur;
      }
      res.log.push_back(res.best);
    }
  }
  return res;
}

}  // namespace gnsym
