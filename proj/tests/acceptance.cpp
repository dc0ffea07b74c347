// One PASS/FAIL line per acceptance criterion. Tolerances and time limits are pinned below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "gnsym/parallel.hpp"
#include "gnsym/report.hpp"
#include "gnsym/verify.hpp"

using namespace gnsym;
namespace fs = std::filesystem;

namespace {

constexpr double kRegionSeconds = 60.0;
constexpr int kRegionDenominator = 120;
constexpr int kDualityDenominator = 100;

constexpr double kKernelSeconds = 30.0;
constexpr double kKernelL2Slope = -0.5, kKernelL2Tol = 0.08;
constexpr double kKernelInfSlope = -1.0, kKernelInfTol = 0.1;

constexpr double kDilationTol = 1e-6;

constexpr double kKnappSeconds = 120.0;
constexpr double kKnappTol = 0.05;
constexpr double kDilatedTol = 0.08;

constexpr double kPiTol = 1e-6;

constexpr int kSeeds = 50;
constexpr double kSplitTol = 1e-12;
constexpr double kPartitionTol = 1e-10;
constexpr double kPlancherelTol = 1e-10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass;
  std::string detail;
};

RecipExponent R(long a, long b = 1) { return RecipExponent(rat(a, b)); }

Result region_equivalence() {
  const auto t0 = Clock::now();
  long mismatches = 0, points = 0;
  const int N = kRegionDenominator;
  for (int d = 2; d <= 4; ++d)
    for (int s = 1; s <= 3; ++s)
      for (int kn = 0; kn <= 4; ++kn) {
        SymbolProfile p;
        p.d = d;
        p.k = d - 1;
        p.alpha1 = 1;
        p.alpha2 = 0;
        p.s1 = s;
        p.s2 = 0;
        p.kappa = rat(kn, 4);
        for (int i = 0; i <= N; ++i)
          for (int j = 0; j <= N; ++j) {
            const RecipExponent ir(rat(i, N)), iq(rat(j, N));
            ++points;
            if (check_gn_highd_general(p, iq, ir).status != check_gn_sphere(d, s, p.kappa, ir, iq).status) ++mismatches;
          }
      }
  const double t = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld points, %ld mismatches, %.1f s (limit %.0f s)", points, mismatches, t,
                kRegionSeconds);
  return {mismatches == 0 && t < kRegionSeconds, buf};
}

Result a_anchors() {
  bool ok = big_a(R(1, 2), R(1, 2), 4, 2) == 0 && big_a(R(1), R(0), 4, 2) == 1;
  for (int k = 1; k <= 5; ++k) ok = ok && big_a(R(1, 2), R(k, 2 * (k + 2)), k + 1, k) == Rat(1, 2);
  long dual_fail = 0, pairs = 0;
  const int N = kDualityDenominator;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= i; ++j) {
      const RecipExponent ip(rat(i, N)), iq(rat(j, N));
      for (int k = 1; k <= 3; ++k) {
        ++pairs;
        if (big_a(ip, iq, 4, k) != big_a(iq.dual(), ip.dual(), 4, k)) ++dual_fail;
      }
    }
  return {ok && dual_fail == 0, "anchors " + std::string(ok ? "exact" : "WRONG") + ", duality " +
                                    std::to_string(pairs - dual_fail) + "/" + std::to_string(pairs) + " pairs"};
}

Result exceptional_geometry() {
  RegionParams p;
  p.d = 4;
  p.k = 2;
  std::set<std::set<std::pair<Rat, Rat>>> segs;
  for (const auto& l : region_boundary("acalc", p))
    if (l.kind == "exceptional") segs.insert({l.vertices.begin(), l.vertices.end()});
  const std::set<std::pair<Rat, Rat>> a{{rat(2, 3), rat(1, 6)}, {rat(2, 3), rat(0)}};
  const std::set<std::pair<Rat, Rat>> b{{rat(5, 6), rat(1, 3)}, {rat(1), rat(1, 3)}};
  const bool ok = segs.size() == 2 && segs.count(a) && segs.count(b);
  return {ok, std::to_string(segs.size()) + " segments, endpoints " + (ok ? "match" : "differ")};
}

Result kernel_scalings() {
  const auto t0 = Clock::now();
  DyadicConfig c;
  c.projector = "slab";
  c.d = 2;
  c.n = 512;
  c.L = 400.0;
  c.j_lo = 2;
  c.j_hi = 6;
  c.kernel_ir = R(1, 2);
  const SlopeReport l2 = fit_dyadic_decay(c);
  c.kernel_ir = R(0);
  const SlopeReport linf = fit_dyadic_decay(c);
  const double t = seconds_since(t0);
  const bool ok = std::abs(l2.fitted_slope - kKernelL2Slope) <= kKernelL2Tol &&
                  std::abs(linf.fitted_slope - kKernelInfSlope) <= kKernelInfTol && t < kKernelSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf, "L2 slope %.4f (%.2f +- %.2f), Linf slope %.4f (%.1f +- %.1f), %.1f s (limit %.0f s)",
                l2.fitted_slope, kKernelL2Slope, kKernelL2Tol, linf.fitted_slope, kKernelInfSlope, kKernelInfTol, t,
                kKernelSeconds);
  return {ok, buf};
}

Result annulus_dilation() {
  double worst = 0.0;
  for (int d = 1; d <= 2; ++d)
    for (long r : {1L, 2L, 0L}) {
      const RecipExponent ir = r == 0 ? R(0) : R(1, r);
      const double expected = std::pow(2.0, d * to_double(1 - ir.value()));
      const int n = d == 1 ? 1024 : 256;
      const double L = 16.0;
      std::vector<double> norms;
      for (int j = 0; j <= 3; ++j) {
        const Grid g = Grid::make(d, n, std::ldexp(L, j));
        norms.push_back(lp_norm(kernel_of(g, dyadic_multiplier(g, j, {0.0, 0.0, 0.0})), ir));
      }
      for (int j = 0; j + 1 < static_cast<int>(norms.size()); ++j)
        worst = std::max(worst, std::abs(norms[j] / norms[j + 1] - expected) / expected);
    }
  char buf[120];
  std::snprintf(buf, sizeof buf, "worst relative deviation %.2e (limit %.0e)", worst, kDilationTol);
  return {worst <= kDilationTol, buf};
}

SlopeReport knapp_run(long q) {
  SlopeConfig c;
  c.family = Family::Knapp;
  for (int e = 3; e <= 7; ++e) c.parameters.push_back(std::ldexp(1.0, -e));
  c.tolerance = kKnappTol;
  c.d = 2;
  return slope_experiment(c, sphere_setup(2, 2, Rat(1, 2), R(1, 2), R(1, q)));
}

Result knapp_dichotomy() {
  const auto t0 = Clock::now();
  const SlopeReport q6 = knapp_run(6), q4 = knapp_run(4);
  const double t = seconds_since(t0);
  const bool ok = std::abs(q6.fitted_slope - 0.0) <= kKnappTol && std::abs(q4.fitted_slope - 0.125) <= kKnappTol &&
                  q6.predicted == 0 && q4.predicted == Rat(1, 8) && t < kKnappSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf, "q=6 slope %.4f (0 +- %.2f), q=4 slope %.4f (0.125 +- %.2f), %.1f s (limit %.0f s)",
                q6.fitted_slope, kKnappTol, q4.fitted_slope, kKnappTol, t, kKnappSeconds);
  return {ok, buf};
}

Result dilated_slope() {
  SlopeConfig c;
  c.family = Family::Dilated;
  for (int e = 2; e <= 5; ++e) c.parameters.push_back(std::ldexp(1.0, e));
  c.tolerance = kDilatedTol;
  c.d = 2;
  const SlopeReport r = slope_experiment(c, sphere_setup(2, 1, Rat(1, 2), R(1, 2), R(1, 8)));
  const bool ok = std::abs(r.fitted_slope - 0.25) <= kDilatedTol && r.predicted == Rat(1, 4);
  char buf[160];
  std::snprintf(buf, sizeof buf, "slope %.4f (0.25 +- %.2f), predicted %s", r.fitted_slope, kDilatedTol,
                r.predicted.get_str().c_str());
  return {ok, buf};
}

Result weighted_consistency() {
  int exact = 0, perturbed = 0, total = 0;
  for (int d = 3; d <= 6; ++d)
    for (const Rat& kappa : {rat(1, 2), rat(5, 8), rat(3, 4), rat(1)})
      for (Model m : {Model::Wave, Model::Schroedinger}) {
        const Verdict v = m == Model::Wave ? wave_exponent(d, kappa) : schroedinger_exponent(d, kappa);
        if (!v.strong() || !v.value) continue;
        ++total;
        const Rat& q = *v.value;
        if (weighted_quotient_check(m, d, kappa, RecipExponent(Rat(1 / q))).scaling_exponent == 0) ++exact;
        bool both = true;
        for (const Rat& dq : {rat(1, 10), rat(-1, 10)}) {
          const Rat qp = q + dq;
          if (qp < 1) continue;
          both = both && weighted_quotient_check(m, d, kappa, RecipExponent(Rat(1 / qp))).scaling_exponent != 0;
        }
        perturbed += both;
      }
  const WeightedCheck w = weighted_quotient_check(Model::Wave, 3, Rat(1, 2), R(1, 6));
  const double err = w.integral ? std::abs(*w.integral - std::numbers::pi) : INFINITY;
  char buf[200];
  std::snprintf(buf, sizeof buf, "residual 0 at %d/%d exponents, nonzero after +-1/10 at %d/%d, |I - pi| = %.1e (limit %.0e)",
                exact, total, perturbed, total, err, kPiTol);
  return {total == 32 && exact == total && perturbed == total && err <= kPiTol, buf};
}

Result partition_invariants() {
  double split = 0.0, part = 0.0, planch = 0.0;
  const CutoffTau tau;
  for (int s = 0; s < kSeeds; ++s) {
    const int d = 1 + s % 2;
    const Grid g = Grid::make(d, d == 1 ? 256 : 64, 8.0 + s % 5);
    const GridFunction u = random_band_limited(g, 1000 + s, 0.0, 0.8 * g.xi_extent());
    double top = 0.0;
    for (const auto& v : u.samples) top = std::max(top, std::abs(v));
    const auto [u1, u2] = split_frequencies(u, tau);
    for (std::size_t i = 0; i < g.size(); ++i)
      split = std::max(split, std::abs(u1.samples[i] + u2.samples[i] - u.samples[i]) / top);

    const std::array<double, 3> xi0{0.0, 0.0, 0.0};
    const auto [a, b] = resolvable_dyadic_range(g, xi0);
    cvec sum(g.size());
    for (int j = a; j <= b; ++j) {
      const cvec m = dyadic_multiplier(g, j, xi0);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
    }
    for (const auto& v : sum) part = std::max(part, std::abs(v - 1.0));
    const GridFunction uh = to_frequency(u);
    double mass = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) mass += std::norm(u.samples[i]);
    const double l2 = std::sqrt(g.cell_x() * mass);
    planch = std::max(planch, std::abs(frequency_l2(uh) - l2) / l2);
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "%d inputs: split %.1e (limit %.0e), partition %.1e (limit %.0e), Plancherel %.1e (limit %.0e)", kSeeds,
                split, kSplitTol, part, kPartitionTol, planch, kPlancherelTol);
  return {split <= kSplitTol && part <= kPartitionTol && planch <= kPlancherelTol, buf};
}

std::map<std::string, std::string> read_tree(const std::string& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream is(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

int run_verify(const std::string& dir, int jobs) {
  fs::remove_all(dir);
  const std::string j = std::to_string(jobs);
  const char* argv[] = {"gnsym", "--jobs", j.c_str(), "--seed", "7", "--out", dir.c_str(), "verify", "--extremizer"};
  std::ostringstream out, err;
  return cli::run(static_cast<int>(std::size(argv)), argv, out, err);
}

Result determinism() {
  const std::string base = (fs::temp_directory_path() / "gnsym_acceptance_determinism").string();
  std::vector<std::map<std::string, std::string>> trees;
  std::vector<std::string> extremizers;
  const GnSetup setup = sphere_setup(1, 2, Rat(1, 2), R(1, 2), R(0));
  ExtremizerConfig ec;
  ec.seed = 7;
  for (int jobs : {1, 4, 1, 4}) {
    const std::string dir = base + "/jobs" + std::to_string(jobs) + "_" + std::to_string(trees.size());
    if (run_verify(dir, jobs) != 0) return {false, "verify run with --jobs " + std::to_string(jobs) + " failed"};
    trees.push_back(read_tree(dir));
    par::set_threads(jobs);
    extremizers.push_back(to_json(extremizer_search(setup, ec)).dump());
  }
  par::set_threads(0);
  fs::remove_all(base);
  bool same = true;
  for (std::size_t i = 1; i < trees.size(); ++i) same = same && trees[i] == trees[0] && extremizers[i] == extremizers[0];
  return {same && trees[0].size() >= 8, std::to_string(trees[0].size()) + " report files and extremizer JSON " +
                                            (same ? "byte-identical" : "DIFFER") + " across 2 runs x --jobs {1,4}"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"region equivalence", region_equivalence},
      {"A-calculus anchors and duality", a_anchors},
      {"exceptional-set geometry", exceptional_geometry},
      {"slab kernel scalings", kernel_scalings},
      {"annulus kernel dilation", annulus_dilation},
      {"Knapp slope dichotomy", knapp_dichotomy},
      {"dilated-family slope", dilated_slope},
      {"weighted-quotient consistency", weighted_consistency},
      {"split and partition invariants", partition_invariants},
      {"determinism across --jobs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s %2zu %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
