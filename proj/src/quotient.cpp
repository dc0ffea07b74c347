#include <cmath>
#include <stdexcept>

#include "gnsym/verify.hpp"

namespace gnsym {

namespace {

double radius(const std::array<double, 3>& xi, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
  return std::sqrt(r2);
}

SymbolSpec sphere_symbol(const Rat& alpha, const Rat& s) {
  const double a = to_double(alpha), sv = to_double(s);
  const bool signed_factor = alpha == 1;
  return SymbolSpec::function("sphere_zero(" + alpha.get_str() + "," + s.get_str() + ")",
                              [a, sv, signed_factor](const std::array<double, 3>& xi, int d) -> cplx {
                                const double r = radius(xi, d);
                                const double t = r - 1.0;
                                const double vanish = signed_factor ? t : std::pow(std::abs(t), a);
                                return vanish * std::pow(1.0 + r * r, 0.5 * (sv - a));
                              });
}

}  // namespace

GnSetup sphere_setup(int d, const Rat& s, const Rat& kappa, const RecipExponent& ir, const RecipExponent& iq) {
  GnSetup g;
  g.p1 = SymbolSpec::radial_power_minus_one(to_double(s));
  g.p2 = SymbolSpec::identity();
  g.profile = sphere_profile(d, s, kappa);
  g.iq = iq;
  g.ir1 = ir;
  g.ir2 = ir;
  return g;
}

GnSetup setup_from_profile(const SymbolProfile& p, const RecipExponent& iq, const RecipExponent& ir1,
                           const RecipExponent& ir2) {
  p.validate();
  GnSetup g;
  g.p1 = sphere_symbol(p.alpha1, p.s1);
  g.p2 = sphere_symbol(p.alpha2, p.s2);
  g.profile = p;
  g.iq = iq;
  g.ir1 = ir1;
  g.ir2 = ir2;
  return g;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Knapp: return "knapp";
    case Family::Dilated: return "dilated";
    case Family::Annulus: return "annulus";
    case Family::Random: return "random";
    case Family::Custom: return "custom";
  }
  return "?";
}

std::string to_string(Consistency v) { return v == Consistency::Consistent ? "Consistent" : "Inconsistent"; }

double QuotientSample::recompute(const Rat& kappa) const {
  const double k = to_double(kappa);
  return norm_u / (std::pow(norm_p1, 1.0 - k) * std::pow(norm_p2, k));
}

QuotientSample gn_quotient(const GridFunction& u_in, const GnSetup& setup, Family family, double parameter) {
  const GridFunction u = u_in.space == Space::Physical ? u_in : to_physical(u_in);
  const double scale = lp_norm(u, 0.5);
  if (scale == 0.0) throw std::invalid_argument("gn_quotient needs u != 0");
  const double k = to_double(setup.profile.kappa);
  QuotientSample q;
  q.family = family;
  q.parameter = parameter;
  q.norm_u = lp_norm(u, setup.iq);
  // A factor with weight zero is skipped; its norm stays 0 and 0^0 = 1 in the product.
  if (k < 1.0) q.norm_p1 = lp_norm(apply_multiplier(u, setup.p1), setup.ir1);
  if (k > 0.0) q.norm_p2 = lp_norm(apply_multiplier(u, setup.p2), setup.ir2);
  const double floor = 1e-13 * scale;
  if ((k < 1.0 && q.norm_p1 <= floor) || (k > 0.0 && q.norm_p2 <= floor))
    throw std::domain_error("denominator degenerate: u is concentrated on the characteristic set");
  q.quotient = q.recompute(setup.profile.kappa);
  return q;
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("least squares needs two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least squares needs distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual_rms = std::sqrt(ss / n);
  return f;
}

}  // namespace gnsym
