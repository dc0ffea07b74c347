#include <cmath>
#include <stdexcept>

#include "gnsym/verify.hpp"

namespace gnsym {

namespace {

// Exponent e with ||u||_p ~ t^e for a unit-L^2 family at scale t (delta for caps and shells).
// A cap of size delta x sqrt(delta)^{d-1} has amplitude delta^{-(d+1)/4} on a set of measure
// delta^{(d+1)/2}; its transform is spread over the dual box of measure delta^{-(d+1)/2}.
Rat cap_exponent(int d, const Rat& ip) { return Rat(Rat(d + 1, 4) - Rat(d + 1, 2) * ip); }

// A shell of width delta: u ~ delta^{1/2} |x|^{-(d-1)/2} out to |x| ~ 1/delta. The L^p mass sits
// at |x| ~ 1 when p > 2d/(d-1) and at |x| ~ 1/delta otherwise.
Rat shell_exponent(int d, const Rat& ip) {
  const Rat far = d * ip - Rat(d - 1, 2);
  return Rat(Rat(1, 2) - (far > 0 ? far : Rat(0)));
}

double log2_abscissa(Family f, double p) { return f == Family::Dilated ? std::log2(p) : -std::log2(p); }

Grid annulus_grid(int d, double delta) {
  const double dxi = delta / 4.0;
  int n = 64;
  while (0.5 * n * dxi < 1.5) n *= 2;
  const int cap = d == 1 ? 1 << 16 : d == 2 ? 2048 : 128;
  if (n > cap) throw std::invalid_argument("annulus grid would be too large for this delta");
  return Grid::make(d, n, std::acos(-1.0) / dxi);
}

std::optional<Status> checker_for(const GnSetup& s) {
  const auto& p = s.profile;
  if (p.d == 1) return check_gn1d_general(p, s.iq, s.ir1, s.ir2).status;
  if (s.ir1 == s.ir2) return check_gn_highd_general(p, s.iq, s.ir1).status;
  return std::nullopt;
}

}  // namespace

Rat predicted_quotient_slope(Family f, const SymbolProfile& p, const RecipExponent& iq, const RecipExponent& ir1,
                             const RecipExponent& ir2) {
  const Rat& k = p.kappa;
  switch (f) {
    case Family::Knapp:
    case Family::Annulus: {
      // The symbols are ~ delta^{alpha_i} on the family, so log2 Q ~ -E log2(1/delta) with
      // E = e(q) - (1-kappa)(alpha1 + e(r1)) - kappa(alpha2 + e(r2)); the slope is -E.
      auto e = [&](const Rat& ip) { return f == Family::Knapp ? cap_exponent(p.d, ip) : shell_exponent(p.d, ip); };
      const Rat E = e(iq.value()) - (1 - k) * (p.alpha1 + e(ir1.value())) - k * (p.alpha2 + e(ir2.value()));
      return Rat(-E);
    }
    case Family::Dilated: {
      // Amplitude 1 on a ball of radius ~R: ||u||_p ~ R^{d - d/p}, and P_i ~ R^{s_i} there.
      const auto e = [&](const Rat& ip) { return Rat(p.d - p.d * ip); };
      return Rat(e(iq.value()) - (1 - k) * (p.s1 + e(ir1.value())) - k * (p.s2 + e(ir2.value())));
    }
    default:
      throw std::invalid_argument("no predicted slope for family " + to_string(f));
  }
}

SlopeReport slope_experiment(const SlopeConfig& cfg, const GnSetup& setup) {
  if (cfg.parameters.size() < 2) throw std::invalid_argument("slope experiment needs at least two parameters");
  if (cfg.d != setup.profile.d) throw std::invalid_argument("slope experiment dimension does not match the profile");
  SlopeReport rep;
  rep.kind = "quotient";
  rep.experiment = "slope-" + to_string(cfg.family);
  rep.tolerance = cfg.tolerance;
  rep.predicted = predicted_quotient_slope(cfg.family, setup.profile, setup.iq, setup.ir1, setup.ir2);
  rep.checker_status = checker_for(setup);
  const auto& p = setup.profile;
  rep.inputs = {{"family", to_string(cfg.family)},
                {"d", std::to_string(p.d)},
                {"kappa", p.kappa.get_str()},
                {"alpha", p.alpha1.get_str() + "," + p.alpha2.get_str()},
                {"s", p.s1.get_str() + "," + p.s2.get_str()},
                {"q", setup.iq.exponent_string()},
                {"r1", setup.ir1.exponent_string()},
                {"r2", setup.ir2.exponent_string()},
                {"symbols", setup.p1.name() + " ; " + setup.p2.name()}};

  for (double t : cfg.parameters) {
    GridFunction u;
    switch (cfg.family) {
      case Family::Knapp:
        u = knapp_cap(knapp_grid(cfg.d, t), t);
        break;
      case Family::Annulus:
        u = annulus_bump(annulus_grid(cfg.d, t), t);
        break;
      case Family::Dilated:
        u = dilated_modulated_bump(dilated_grid(cfg.d, t), t);
        break;
      default:
        throw std::invalid_argument("slope experiments support knapp, annulus and dilated families");
    }
    const QuotientSample s = gn_quotient(u, setup, cfg.family, t);
    rep.samples.push_back(s);
    rep.abscissae.push_back(log2_abscissa(cfg.family, t));
    rep.ordinates.push_back(std::log2(s.quotient));
  }
  const LineFit fit = least_squares(rep.abscissae, rep.ordinates);
  rep.fitted_slope = fit.slope;
  rep.intercept = fit.intercept;
  rep.residual_rms = fit.residual_rms;
  rep.verdict = std::abs(fit.slope - to_double(rep.predicted)) <= cfg.tolerance ? Consistency::Consistent
                                                                                  : Consistency::Inconsistent;
  if (rep.checker_status) {
    // A positive predicted slope means the family blows the quotient up, so the checker must
    // reject these exponents; a nonpositive one is compatible with either verdict.
    const bool blowup = rep.predicted > 0;
    const bool agrees = !blowup || *rep.checker_status == Status::Fails;
    rep.notes.push_back(std::string("checker ") + to_string(*rep.checker_status) +
                        (agrees ? ", consistent with the predicted slope sign" : ", contradicts the predicted slope sign"));
  }
  return rep;
}

}  // namespace gnsym
