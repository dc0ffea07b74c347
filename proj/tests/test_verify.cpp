#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gnsym/report.hpp"
#include "gnsym/verify.hpp"

using namespace gnsym;

namespace {

RecipExponent R(long a, long b = 1) { return RecipExponent(rat(a, b)); }

GridFunction gaussian(const Grid& g, double sigma = 1.0) {
  GridFunction u = GridFunction::zeros(g, Space::Physical);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = g.x_at(i);
    double r2 = 0.0;
    for (int a = 0; a < g.d; ++a) r2 += x[a] * x[a];
    u.samples[i] = std::exp(-0.5 * r2 / (sigma * sigma));
  }
  return u;
}

// Midpoint-free trapezoid on a periodic box: sum h f(x_i) over n points of [-L, L).
template <class F>
double box_quadrature(F f, double L, int n) {
  const double h = 2.0 * L / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(-L + i * h);
  return h * s;
}

}  // namespace

TEST_CASE("quotient with kappa = 1, P2 = identity, r2 = q is 1") {
  const Grid g = Grid::make(2, 64, 8.0);
  const GridFunction u = random_band_limited(g, 3, 0.0, 2.0);
  for (long q : {2, 4, 6}) {
    const GnSetup s = sphere_setup(2, 2, 1, R(1, q), R(1, q));
    CHECK(gn_quotient(u, s).quotient == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("quotient is homogeneous of degree zero and recomputable") {
  const Grid g = Grid::make(2, 64, 8.0);
  const GridFunction u = random_band_limited(g, 4, 0.0, 2.0);
  GridFunction v = u;
  for (auto& x : v.samples) x *= 7.0;
  const GnSetup s = sphere_setup(2, 2, Rat(1, 2), R(1, 2), R(1, 6));
  const QuotientSample a = gn_quotient(u, s), b = gn_quotient(v, s);
  CHECK(a.quotient == doctest::Approx(b.quotient).epsilon(1e-13));
  CHECK(std::abs(a.recompute(s.profile.kappa) - a.quotient) <= 1e-10 * a.quotient);
  // Frequency-space input gives the same value.
  CHECK(gn_quotient(to_frequency(u), s).quotient == doctest::Approx(a.quotient).epsilon(1e-12));
}

TEST_CASE("Gaussian quotient in d = 1 against closed form and dense quadrature") {
  // (|D|^2 - 1) e^{-x^2/2} = -x^2 e^{-x^2/2}; s = 2, kappa = 1/2, r1 = r2 = 2, q = 4.
  const Grid g = Grid::make(1, 256, 16.0);
  const GnSetup s = sphere_setup(1, 2, Rat(1, 2), R(1, 2), R(1, 4));
  const double measured = gn_quotient(gaussian(g), s).quotient;

  const double pi = std::numbers::pi;
  const double exact = std::pow(pi / 2.0, 0.125) / (std::pow(0.75 * std::sqrt(pi), 0.25) * std::pow(pi, 0.125));
  CHECK(measured == doctest::Approx(exact).epsilon(1e-10));

  const int fine = 4 * g.n;
  const double n4 = std::pow(box_quadrature([](double x) { return std::exp(-2.0 * x * x); }, g.L, fine), 0.25);
  const double p1 = std::sqrt(box_quadrature([](double x) { return std::pow(x, 4) * std::exp(-x * x); }, g.L, fine));
  const double p2 = std::sqrt(box_quadrature([](double x) { return std::exp(-x * x); }, g.L, fine));
  const double oracle = n4 / (std::sqrt(p1) * std::sqrt(p2));
  CHECK(std::abs(measured - oracle) < 1e-4);
}

TEST_CASE("degenerate denominators are reported") {
  const Grid g = Grid::make(1, 64, 8.0);
  const GnSetup s = sphere_setup(1, 2, Rat(1, 2), R(1, 2), R(1, 4));
  CHECK_THROWS_AS(gn_quotient(GridFunction::zeros(g, Space::Physical), s), std::invalid_argument);
  // A symbol that vanishes on every occupied frequency.
  GnSetup z = s;
  z.p1 = SymbolSpec::function("zero", [](const std::array<double, 3>&, int) { return cplx(0.0); });
  try {
    gn_quotient(gaussian(g), z);
    FAIL("expected a degenerate denominator");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("denominator degenerate") != std::string::npos);
  }
  // With kappa = 1 the vanishing factor has weight zero and is skipped.
  GnSetup k1 = z;
  k1.profile.kappa = 1;
  CHECK_NOTHROW(gn_quotient(gaussian(g), k1));
}

TEST_CASE("least squares recovers an exact line") {
  const LineFit f = least_squares({0, 1, 2, 3}, {1.0, -0.5, -2.0, -3.5});
  CHECK(f.slope == doctest::Approx(-1.5));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.residual_rms < 1e-14);
  CHECK_THROWS(least_squares({1}, {1}));
  CHECK_THROWS(least_squares({1, 1}, {0, 2}));
}

TEST_CASE("operator norm estimates") {
  const ProjectorSpec id{"identity", Grid::make(2, 64, 8.0)};
  const OpNormEstimate e = estimate_opnorm(id, 0, 0.5, 0.5, 2, 1);
  CHECK(e.lower >= 1.0 - 1e-10);
  CHECK_FALSE(e.witness.empty());

  // Annulus with (p, q) = (1, inf): Young's bound is the kernel maximum.
  const ProjectorSpec ann{"annulus", Grid::make(2, 64, 16.0)};
  const OpNormEstimate y = estimate_opnorm(ann, 0, 1.0, 0.0, 2, 1);
  REQUIRE(y.upper);
  const double kmax = lp_norm(kernel_of(ann.grid, projector_multiplier(ann, 0)), 0.0);
  CHECK(*y.upper == doctest::Approx(kmax).epsilon(1e-14));

  for (int j = 0; j <= 2; ++j)
    for (auto [ip, iq] : {std::pair{1.0, 0.0}, {0.5, 0.5}, {0.75, 0.25}, {0.5, 1.0 / 6}}) {
      const OpNormEstimate est = estimate_opnorm(ann, j, ip, iq, 2, 5);
      REQUIRE(est.upper);
      CHECK(est.lower <= *est.upper * (1 + 1e-10));
    }
  // No Young bound outside p <= q.
  CHECK_FALSE(estimate_opnorm(ann, 0, 0.25, 0.5, 1, 1).upper);
  CHECK_THROWS(estimate_opnorm(ann, 0, 0.5, 0.5, -1, 1));
  CHECK_THROWS(estimate_opnorm(ProjectorSpec{"bogus", ann.grid}, 0, 0.5, 0.5, 1, 1));
}

TEST_CASE("dyadic fit on exact dilation data") {
  for (int d = 1; d <= 2; ++d)
    for (long r : {1, 2}) {
      DyadicConfig c;
      c.projector = "annulus";
      c.d = d;
      c.n = d == 1 ? 1024 : 128;
      c.L = 32.0;
      c.j_lo = 0;
      c.j_hi = 3;
      c.kernel_ir = R(1, r);
      const SlopeReport rep = fit_dyadic_decay(c);
      CHECK(rep.predicted == Rat(-d) * (1 - Rat(1, r)));
      CHECK(std::abs(rep.fitted_slope - to_double(rep.predicted)) < 1e-9);
      CHECK(rep.verdict == Consistency::Consistent);
    }
}

TEST_CASE("dyadic fit predictions and guards") {
  DyadicConfig c;
  c.n = 128;
  c.L = 64.0;
  c.j_lo = 0;
  c.j_hi = 2;
  CHECK_THROWS(fit_dyadic_decay(c));  // three points
  c.j_hi = 3;
  c.projector = "bogus";
  CHECK_THROWS(fit_dyadic_decay(c));
  c.projector = "slab";
  c.kernel_ir = R(1, 3);
  CHECK_THROWS(fit_dyadic_decay(c));
  c.kernel_ir.reset();
  c.ip = R(1, 4);
  c.iq = R(1, 2);
  CHECK_THROWS(fit_dyadic_decay(c));
}

TEST_CASE("slab fit at an exceptional pair carries the weak-type status") {
  DyadicConfig c;
  c.projector = "slab";
  c.d = 2;
  c.n = 128;
  c.L = 100.0;
  c.j_lo = 0;
  c.j_hi = 3;
  c.ensemble = 1;
  c.ip = R(3, 4);
  c.iq = R(1, 12);
  const SlopeReport rep = fit_dyadic_decay(c);
  REQUIRE(rep.checker_status);
  CHECK(*rep.checker_status == Status::WeakTypeOnly);
  CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("predicted quotient slopes") {
  const SymbolProfile sp = sphere_profile(2, 2, Rat(1, 2));
  CHECK(predicted_quotient_slope(Family::Knapp, sp, R(1, 6), R(1, 2), R(1, 2)) == 0);
  CHECK(predicted_quotient_slope(Family::Knapp, sp, R(1, 4), R(1, 2), R(1, 2)) == Rat(1, 8));
  const SymbolProfile s1 = sphere_profile(2, 1, Rat(1, 2));
  CHECK(predicted_quotient_slope(Family::Dilated, s1, R(1, 8), R(1, 2), R(1, 2)) == Rat(1, 4));
}

TEST_CASE("predicted slope signs flip exactly where the checker conditions flip") {
  // Knapp probes the curvature-type lower bound, dilation probes the scaling upper bound.
  for (int d = 2; d <= 3; ++d)
    for (int s = 1; s <= 3; ++s)
      for (int kn = 0; kn <= 3; ++kn) {
        const Rat kappa = rat(kn, 4);
        const SymbolProfile p = sphere_profile(d, s, kappa);
        for (int j = 0; j <= 24; ++j) {
          const RecipExponent iq(rat(j, 48)), ir(Rat(1, 2));
          const Verdict v = check_gn_sphere(d, s, kappa, ir, iq);
          if (d == 2) {
            const Rat knapp = predicted_quotient_slope(Family::Knapp, p, iq, ir, ir);
            CHECK((knapp > 0) == !v.find("lower")->satisfied);
          }
          const Rat dil = predicted_quotient_slope(Family::Dilated, p, iq, ir, ir);
          CHECK((dil > 0) == !v.find("upper")->satisfied);
        }
      }
}

TEST_CASE("extremizer search") {
  const GnSetup s = sphere_setup(1, 2, Rat(1, 2), R(1, 2), R(0));
  ExtremizerConfig c;
  c.restarts = 2;
  c.iterations = 60;
  c.seed = 17;
  const ExtremizerResult a = extremizer_search(s, c);
  CHECK(a.best >= a.floor_value);
  REQUIRE(a.log.size() == 120u);
  for (std::size_t i = 1; i < a.log.size(); ++i) CHECK(a.log[i] >= a.log[i - 1]);
  CHECK(a.log.back() == a.best);
  const double again = gn_quotient(a.function(), s).quotient;
  CHECK(std::abs(again - a.best) <= 1e-8 * a.best);
  const ExtremizerResult b = extremizer_search(s, c);
  CHECK(b.best == a.best);
  CHECK(b.coefficients == a.coefficients);
  CHECK(to_json(a).dump() == to_json(b).dump());

  const GnSetup one = sphere_setup(1, 2, 1, R(1, 4), R(1, 4));
  c.iterations = 10;
  CHECK(extremizer_search(one, c).best == doctest::Approx(1.0).epsilon(1e-12));
  c.restarts = 0;
  CHECK_THROWS_AS(extremizer_search(s, c), std::invalid_argument);
}

TEST_CASE("kernel L1 mass") {
  const Grid g = Grid::make(1, 256, 32.0);
  // 2 exp(-xi^2/2) has the positive kernel (2pi)^{-1/2} 2 e^{-x^2/2}, mass 2.
  const SymbolSpec gauss = SymbolSpec::function("2 gauss", [](const std::array<double, 3>& xi, int) {
    return cplx(2.0 * std::exp(-0.5 * xi[0] * xi[0]));
  });
  const KernelMass m = multiplier_kernel_l1(gauss, g);
  CHECK(m.extrapolated == doctest::Approx(2.0).epsilon(0.01));
  // The identity has the discrete delta as kernel, mass 1 at every resolution.
  const KernelMass id = multiplier_kernel_l1(SymbolSpec::identity(), Grid::make(2, 64, 16.0));
  CHECK(id.coarse == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.fine == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernel of xi <xi>^{-1} has slowly growing discrete mass") {
  // The kernel behaves like 1/|x| near the origin, so the grid L1 mass grows by roughly
  // (2/pi) log 2 per doubling instead of settling.
  const SymbolSpec m = SymbolSpec::function("xi/<xi>", [](const std::array<double, 3>& xi, int) {
    return cplx(xi[0] / std::sqrt(1.0 + xi[0] * xi[0]));
  });
  const KernelMass a = multiplier_kernel_l1(m, Grid::make(1, 512, 32.0));
  const KernelMass b = multiplier_kernel_l1(m, Grid::make(1, 1024, 32.0));
  const double step = b.fine - a.fine;
  CHECK(step > 0.0);
  CHECK(step == doctest::Approx(2.0 / std::numbers::pi * std::log(2.0)).epsilon(0.1));
}

TEST_CASE("weighted quotient examples") {
  const WeightedCheck w = weighted_quotient_check(Model::Wave, 3, Rat(1, 2), R(1, 6));
  CHECK(w.verdict.status == Status::Strong);
  CHECK(w.scaling_exponent == 0);
  CHECK(w.integrand_exponent == 0);
  REQUIRE(w.integral);
  CHECK(std::abs(*w.integral - std::numbers::pi) < 1e-6);
  CHECK(weighted_quotient_check(Model::Wave, 3, Rat(1, 2), R(1, 4)).verdict.status == Status::Fails);
  const WeightedCheck s = weighted_quotient_check(Model::Schroedinger, 3, Rat(1, 2), R(1, 4));
  CHECK(s.scaling_exponent == 0);
  CHECK(s.integrand_exponent == 0);
  CHECK(s.converges);
  CHECK(weighted_quotient_check(Model::Wave, 1, Rat(1, 2), R(1, 4)).verdict.status == Status::OutOfScope);
}

TEST_CASE("weighted integral closed form") {
  for (double a : {-0.9, -0.5, 0.0, 0.3, 0.8}) CHECK(weighted_integral(a) == doctest::Approx(std::numbers::pi / std::cos(0.5 * std::numbers::pi * a)).epsilon(1e-9));
  CHECK_THROWS(weighted_integral(1.0));
}

TEST_CASE("weighted checks are Strong exactly at the wave and Schroedinger exponents") {
  for (int d = 2; d <= 6; ++d)
    for (int kn = 0; kn <= 8; ++kn) {
      const Rat kappa = rat(kn, 8);
      for (int j = 0; j <= 60; ++j) {
        const RecipExponent iq(rat(j, 120));
        const Verdict wv = wave_exponent(d, kappa), sv = schroedinger_exponent(d, kappa);
        const bool wave_hit = wv.strong() && 1 / *wv.value == iq.value();
        const bool schr_hit = sv.strong() && 1 / *sv.value == iq.value();
        CHECK(weighted_quotient_check(Model::Wave, d, kappa, iq).verdict.strong() == wave_hit);
        CHECK(weighted_quotient_check(Model::Schroedinger, d, kappa, iq).verdict.strong() == schr_hit);
      }
    }
}
