#include <sstream>
#include <stdexcept>

#include "gnsym/exponents.hpp"

namespace gnsym {

namespace {

std::string s(const Rat& x) { return x.get_str(); }

class Trace {
 public:
  bool check(std::string id, bool ok, std::string text) {
    reasons_.push_back({std::move(id), ok, std::move(text)});
    all_ = all_ && ok;
    return ok;
  }
  Verdict finish() const {
    Verdict v;
    v.status = all_ ? Status::Strong : Status::Fails;
    v.reasons = reasons_;
    return v;
  }

 private:
  std::vector<Condition> reasons_;
  bool all_ = true;
};

Verdict out_of_scope(std::string id, std::string text) {
  Verdict v;
  v.status = Status::OutOfScope;
  v.reasons.push_back({std::move(id), false, std::move(text)});
  return v;
}

bool in01(const Rat& x) { return x >= 0 && x <= 1; }
bool zero_or_one(const Rat& x) { return x == 0 || x == 1; }

Rat middle(const Rat& kappa, const Rat& ir1, const Rat& ir2, const Rat& iq) {
  return Rat((1 - kappa) * ir1 + kappa * ir2 - iq);
}

std::string le(const std::string& lhs, const Rat& a, const std::string& rhs, const Rat& b, bool strict = false) {
  std::ostringstream os;
  os << lhs << " = " << s(a) << (strict ? " < " : " <= ") << rhs << " = " << s(b);
  return os.str();
}

// Endpoint conditions (i)-(iii) for the large-frequency bound at M = sbar/d. With kappa_guards the
// r1 = 1 branch applies only for kappa < 1 and the r2 = 1 branch only for kappa > 0.
void s_endpoint_conditions(Trace& t, const SymbolProfile& p, const Rat& iq, const Rat& ir1, const Rat& ir2,
                           bool kappa_guards) {
  const Rat& kappa = p.kappa;
  const Rat b1 = ir1 - p.s1 / p.d;
  const Rat b2 = ir2 - p.s2 / p.d;
  if (iq == 0) {
    const bool alt1 = b1 != 0 && b2 != 0;
    const bool alt2 = ir1 == 0 && ir2 == 0 && p.s1 == 0 && p.s2 == 0;
    const bool alt3 = p.d == 1 && ir1 == p.s1 && ir2 == p.s2 && zero_or_one(p.s1) && zero_or_one(p.s2);
    t.check("s-endpoint-i", alt1 || alt2 || alt3,
            "q = inf endpoint: need 1/r1 - s1/d != 0 != 1/r2 - s2/d (got " + s(b1) + ", " + s(b2) +
                "), or r1 = r2 = inf with s1 = s2 = 0, or d = 1 with (r1, r2) = (1/s1, 1/s2), s1, s2 in {0,1}");
    return;
  }
  if (iq == 1) {
    t.check("s-endpoint-q1", true, "q = 1 endpoint: no extra condition");
    return;
  }
  if (b1 != iq || b2 != iq) {
    t.check("s-endpoint-chain", true, "1 < q < inf endpoint off the chain 1/r1 - s1/d = 1/q = 1/r2 - s2/d");
    return;
  }
  if (ir1 == 1 && (!kappa_guards || kappa < 1)) {
    const bool alt1 = ir2 > 0 && ir2 < 1 && ir2 > iq && kappa >= iq / ir2;
    const bool alt2 = ir2 == 0 && iq <= kappa && kappa <= 1 - iq;
    t.check("s-endpoint-ii", alt1 || alt2,
            "r1 = 1 on the endpoint chain: need 1 < r2 < q with kappa >= r2/q, or r2 = inf with 1/q <= kappa <= 1/q'");
  }
  if (ir2 == 1 && (!kappa_guards || kappa > 0)) {
    const Rat lam = 1 - kappa;
    const bool alt1 = ir1 > 0 && ir1 < 1 && ir1 > iq && lam >= iq / ir1;
    const bool alt2 = ir1 == 0 && iq <= lam && lam <= 1 - iq;
    t.check("s-endpoint-iii", alt1 || alt2,
            "r2 = 1 on the endpoint chain: need 1 < r1 < q with 1-kappa >= r1/q, or r1 = inf with 1/q <= 1-kappa <= 1/q'");
  }
}

// Endpoint conditions (iv)-(vi) at M = abar in one dimension.
void a_endpoint_conditions(Trace& t, const SymbolProfile& p, const Rat& iq, const Rat& ir1, const Rat& ir2) {
  const Rat& kappa = p.kappa;
  const Rat c1 = ir1 - p.alpha1;
  const Rat c2 = ir2 - p.alpha2;
  if (iq == 0) {
    const bool alt1 = c1 != 0 && c2 != 0;
    const bool alt2 = c1 == 0 && c2 == 0 && zero_or_one(p.alpha1) && zero_or_one(p.alpha2);
    t.check("a-endpoint-iv", alt1 || alt2,
            "q = inf endpoint: need 1/r1 - alpha1 != 0 != 1/r2 - alpha2 (got " + s(c1) + ", " + s(c2) +
                "), or (r1, r2) = (1/alpha1, 1/alpha2) with alpha1, alpha2 in {0,1}");
    return;
  }
  if (iq == 1 || c1 != iq || c2 != iq) return;
  const bool alphas_ok = in01(p.alpha1) && in01(p.alpha2);
  bool v = alphas_ok;
  if (ir1 == 1 && kappa < 1) v = v && ir2 > 0 && ir2 < 1 && ir2 > iq && kappa >= iq / ir2;
  t.check("a-endpoint-v", v,
          "chain 1/r1 - alpha1 = 1/q = 1/r2 - alpha2: need alpha1, alpha2 in [0,1], and for r1 = 1, kappa < 1 "
          "also 1 < r2 < q with kappa >= r2/q");
  bool vi = alphas_ok;
  if (ir2 == 1 && kappa > 0) vi = vi && ir1 > 0 && ir1 < 1 && ir1 > iq && 1 - kappa >= iq / ir1;
  t.check("a-endpoint-vi", vi,
          "chain 1/r1 - alpha1 = 1/q = 1/r2 - alpha2: need alpha1, alpha2 in [0,1], and for r2 = 1, kappa > 0 "
          "also 1 < r1 < q with 1-kappa >= r1/q");
}

std::optional<Verdict> validate_profile(const SymbolProfile& p) {
  try {
    p.validate();
  } catch (const std::exception& e) {
    return out_of_scope("profile", e.what());
  }
  return std::nullopt;
}

}  // namespace

Verdict check_gn_sphere(int d, const Rat& sv, const Rat& kappa, const RecipExponent& irx, const RecipExponent& iqx) {
  if (d < 2) return out_of_scope("domain", "needs d >= 2");
  if (sv <= 0) return out_of_scope("domain", "needs s > 0");
  if (kappa < 0 || kappa > 1) return out_of_scope("domain", "needs kappa in [0,1]");
  const Rat& ir = irx.value();
  const Rat& iq = iqx.value();
  if (ir < rat(1, 2) || iq > rat(1, 2)) return out_of_scope("range", "needs r in [1,2] and q in [2,inf]");
  Trace t;
  const Rat gap = ir - iq;
  const Rat lower = 2 * (1 - kappa) / (d + 1);
  const Rat upper = (1 - kappa) * sv / d;
  t.check("lower", lower <= gap, le("2(1-kappa)/(d+1)", lower, "1/r - 1/q", gap));
  t.check("upper", gap <= upper, le("1/r - 1/q", gap, "(1-kappa)s/d", upper));
  const Rat m = min_of(ir, Rat(1 - iq));
  const Rat c = (d + 1 - 2 * kappa) / (2 * d);
  const bool strict = kappa == 0;
  t.check("curvature", strict ? m > c : m >= c,
          le("(d+1-2kappa)/(2d)", c, "min{1/r, 1/q'}", m, strict));
  return t.finish();
}

Verdict check_gn_1d(const Rat& kappa, const Rat& sv, const RecipExponent& iq, const RecipExponent& ir1,
                    const RecipExponent& ir2) {
  if (sv <= 0) return out_of_scope("domain", "needs s > 0");
  if (kappa < 0 || kappa > 1) return out_of_scope("domain", "needs kappa in [0,1]");
  const Rat m = middle(kappa, ir1.value(), ir2.value(), iq.value());
  Trace t;
  t.check("lower", 1 - kappa <= m, le("1-kappa", Rat(1 - kappa), "M", m));
  t.check("upper", m <= (1 - kappa) * sv, le("M", m, "(1-kappa)s", Rat((1 - kappa) * sv)));
  return t.finish();
}

Verdict check_large_freq(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& ir1x,
                         const RecipExponent& ir2x) {
  if (auto bad = validate_profile(p)) return *bad;
  const Rat& iq = iqx.value();
  const Rat& ir1 = ir1x.value();
  const Rat& ir2 = ir2x.value();
  const Rat m = middle(p.kappa, ir1, ir2, iq);
  const Rat top = p.sbar() / p.d;
  Trace t;
  t.check("nonnegative", m >= 0, le("0", Rat(0), "M", m));
  t.check("s-upper", m <= top, le("M", m, "sbar/d", top));
  if (m == top) s_endpoint_conditions(t, p, iq, ir1, ir2, true);
  return t.finish();
}

Verdict critical_part_1d(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& ir1x,
                         const RecipExponent& ir2x) {
  if (auto bad = validate_profile(p)) return *bad;
  if (p.d != 1) return out_of_scope("domain", "one-dimensional reduction needs d = 1");
  const Rat abar = p.abar();
  if (abar <= 0) return out_of_scope("domain", "needs abar > 0 (abar = " + s(abar) + ")");
  const Rat& iq = iqx.value();
  const Rat& ir1 = ir1x.value();
  const Rat& ir2 = ir2x.value();
  const Rat m = middle(p.kappa, ir1, ir2, iq);
  Trace t;
  t.check("a-lower", abar <= m, le("abar", abar, "M", m));
  if (m == abar) a_endpoint_conditions(t, p, iq, ir1, ir2);
  return t.finish();
}

Verdict check_gn1d_general(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& ir1x,
                           const RecipExponent& ir2x) {
  if (auto bad = validate_profile(p)) return *bad;
  if (p.d != 1) return out_of_scope("domain", "needs d = 1");
  const Rat abar = p.abar();
  const Rat sbar = p.sbar();
  if (!(abar > 0 && abar <= sbar))
    return out_of_scope("domain", "needs 0 < abar <= sbar (abar = " + s(abar) + ", sbar = " + s(sbar) + ")");
  const Rat& iq = iqx.value();
  const Rat& ir1 = ir1x.value();
  const Rat& ir2 = ir2x.value();
  const Rat m = middle(p.kappa, ir1, ir2, iq);
  Trace t;
  t.check("a-lower", abar <= m, le("abar", abar, "M", m));
  t.check("s-upper", m <= sbar, le("M", m, "sbar", sbar));
  if (m == sbar) s_endpoint_conditions(t, p, iq, ir1, ir2, false);
  if (m == abar) a_endpoint_conditions(t, p, iq, ir1, ir2);
  return t.finish();
}

Verdict critical_part_highd(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& irx) {
  if (auto bad = validate_profile(p)) return *bad;
  if (p.d < 2) return out_of_scope("domain", "needs d >= 2");
  const Rat abar = p.abar();
  if (abar < 0 || abar > 1) return out_of_scope("domain", "needs 0 <= abar <= 1 (abar = " + s(abar) + ")");
  const Rat& ir = irx.value();
  const Rat& iq = iqx.value();
  if (ir < rat(1, 2) || iq > rat(1, 2)) return out_of_scope("range", "needs r in [1,2] and q in [2,inf]");
  const int k = p.k;
  Trace t;
  const Rat gap = ir - iq;
  const Rat lower = 2 * abar / (k + 2);
  t.check("a-lower", lower <= gap, le("2abar/(k+2)", lower, "1/r - 1/q", gap));
  const Rat m = min_of(ir, Rat(1 - iq));
  const Rat c = (k + 2 * abar) / (2 * (k + 1));
  const bool strict = abar == 1 || p.alpha1 == p.alpha2 || p.kappa == 0 || p.kappa == 1;
  t.check("curvature", strict ? m > c : m >= c, le("(k+2abar)/(2(k+1))", c, "min{1/r, 1/q'}", m, strict));
  return t.finish();
}

Verdict check_gn_highd_general(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& irx) {
  Verdict v = critical_part_highd(p, iqx, irx);
  if (v.status == Status::OutOfScope) return v;
  const Rat& ir = irx.value();
  const Rat& iq = iqx.value();
  const Rat sbar = p.sbar();
  const Rat top = sbar / p.d;
  Trace t;
  for (const auto& c : v.reasons) t.check(c.id, c.satisfied, c.text);
  t.check("s-upper", ir - iq <= top, le("1/r - 1/q", Rat(ir - iq), "sbar/d", top));
  if (p.s1 == p.s2 && sbar > 0 && sbar <= p.d) {
    const bool excluded = iq == 0 && ir == top;
    t.check("excluded-point", !excluded, "(q, r) != (inf, d/sbar) when s1 = s2 = sbar in (0, d]");
  }
  return t.finish();
}

Verdict check_local_gn(int d, const Rat& sv, const Rat& kappa, const RecipExponent& iqx, const RecipExponent& irx) {
  if (d < 1) return out_of_scope("domain", "needs d >= 1");
  if (!(kappa > 0 && kappa < 1)) return out_of_scope("domain", "needs kappa in (0,1)");
  if (sv <= 0) return out_of_scope("domain", "needs s > 0");
  const Rat& ir = irx.value();
  const Rat& iq = iqx.value();
  const Rat gap = ir - iq;
  Trace t;
  if (sv <= d) {
    const bool excluded = iq == 0 && ir == sv / d;
    t.check("excluded-point", !excluded, "(q, r) != (inf, d/s) when 0 < s <= d");
  }
  if (d == 1) {
    t.check("lower", 1 - kappa <= gap, le("1-kappa", Rat(1 - kappa), "1/r - 1/q", gap));
    t.check("upper", gap <= sv, le("1/r - 1/q", gap, "s", sv));
    return t.finish();
  }
  const int k = d - 1;
  t.check("range", ir >= rat(1, 2) && iq <= rat(1, 2), "1 <= r <= 2 <= q <= inf");
  const Rat lower = 2 * (1 - kappa) / (k + 2);
  t.check("lower", lower <= gap, le("2(1-kappa)/(k+2)", lower, "1/r - 1/q", gap));
  t.check("upper", gap <= sv / d, le("1/r - 1/q", gap, "s/d", Rat(sv / d)));
  const Rat m = min_of(ir, Rat(1 - iq));
  const Rat c = (k + 2 - 2 * kappa) / (2 * (k + 1));
  t.check("curvature", m >= c, le("(k+2-2kappa)/(2(k+1))", c, "min{1/r, 1/q'}", m));
  return t.finish();
}

Verdict check_local_gn_general(const SymbolProfile& p, const RecipExponent& iq, const RecipExponent& ir1,
                               const RecipExponent& ir2, int steps) {
  if (auto bad = validate_profile(p)) return *bad;
  if (steps < 1) return out_of_scope("steps", "kappa grid needs at least one step");
  std::optional<Rat> k1, k2;
  for (int i = 0; i <= steps && !k1; ++i) {
    const Rat ki = p.kappa * i / steps;
    const SymbolProfile pi = p.with_kappa(ki);
    Verdict a;
    if (p.d == 1)
      a = critical_part_1d(pi, iq, ir1, ir2);
    else if (ir1 == ir2)
      a = critical_part_highd(pi, iq, ir1);
    else
      break;
    if (a.strong()) k1 = ki;
  }
  for (int i = 0; i <= steps && !k2; ++i) {
    const Rat ki = p.kappa * i / steps;
    if (check_large_freq(p.with_kappa(ki), iq, ir1, ir2).strong()) k2 = ki;
  }
  Trace t;
  t.check("critical-kappa1", k1.has_value(),
          k1 ? "critical-frequency membership at kappa1 = " + s(*k1)
             : "no kappa1 on the grid gives computable critical-frequency membership");
  t.check("large-kappa2", k2.has_value(),
          k2 ? "large-frequency membership at kappa2 = " + s(*k2) : "no kappa2 on the grid gives large-frequency membership");
  return t.finish();
}

Verdict wave_exponent(int d, const Rat& kappa) {
  if (d < 2) return out_of_scope("domain", "needs d >= 2");
  const Rat den = d - 4 + 4 * kappa;
  Trace t;
  Verdict v;
  if (den <= 0) {
    t.check("denominator", false, "d - 4 + 4kappa = " + s(den) + " <= 0, no exponent");
    return t.finish();
  }
  const Rat q = 2 * d / den;
  t.check("denominator", true, "q = 2d/(d-4+4kappa) = " + s(q));
  if (d == 2)
    t.check("kappa-range", kappa > rat(1, 2) && kappa <= 1, "d = 2 needs 1/2 < kappa <= 1");
  else
    t.check("kappa-range", kappa >= rat(1, 2) && kappa <= 1, "d >= 3 needs 1/2 <= kappa <= 1");
  v = t.finish();
  v.value = q;
  v.value_label = "q";
  return v;
}

Verdict schroedinger_exponent(int d, const Rat& kappa) {
  if (d < 2) return out_of_scope("domain", "needs d >= 2");
  const Rat den = d - 3 + 4 * kappa;
  Trace t;
  if (den <= 0) {
    t.check("denominator", false, "d - 3 + 4kappa = " + s(den) + " <= 0, no exponent");
    return t.finish();
  }
  const Rat q = 2 * (d + 1) / den;
  t.check("denominator", true, "q = 2(d+1)/(d-3+4kappa) = " + s(q));
  t.check("kappa-range", kappa >= rat(1, 2) && kappa <= 1, "needs 1/2 <= kappa <= 1");
  Verdict v = t.finish();
  v.value = q;
  v.value_label = "q";
  return v;
}

Verdict check_dyadic_slab(const RecipExponent& ip, const RecipExponent& iq, int d, int k, const Rat& eps) {
  if (eps <= 0) return out_of_scope("eps", "needs eps > 0");
  if (d >= 2 && (k < 1 || k > d - 1)) return out_of_scope("domain", "needs 1 <= k <= d-1");
  if (iq.value() > ip.value()) return out_of_scope("range", "needs p <= q");
  Verdict v;
  v.value = a_eps(ip, iq, d, k, eps);
  v.value_label = "A_eps";
  const bool exceptional = d >= 2 && in_exceptional_set(ip, iq, k);
  v.reasons.push_back({"exceptional", !exceptional,
                       exceptional ? "(p, q) lies in the exceptional set: restricted weak-type bound only"
                                   : "(p, q) off the exceptional set: strong bound"});
  v.status = exceptional ? Status::WeakTypeOnly : Status::Strong;
  return v;
}

ResearchResult research_critical_search(const SymbolProfile& p, const RecipExponent& iqx, const RecipExponent& ir1x,
                                        const RecipExponent& ir2x, int n) {
  ResearchResult out;
  const Rat& kappa = p.kappa;
  const Rat& iq = iqx.value();
  const Rat& ir1 = ir1x.value();
  const Rat& ir2 = ir2x.value();
  if (!(kappa > 0 && kappa < 1) || n < 1) {
    out.label += " (skipped: needs 0 < kappa < 1 and n >= 1)";
    return out;
  }
  auto a_at = [&](const Rat& ir, const Rat& iqi) -> Rat {
    return p.d == 1 ? Rat(ir - iqi) : big_a(RecipExponent(ir), RecipExponent(iqi), p.d, p.k);
  };
  auto exc = [&](const Rat& ir, const Rat& iqi) -> int {
    return p.d >= 2 && in_exceptional_set(RecipExponent(ir), RecipExponent(iqi), p.k) ? 1 : 0;
  };
  const Rat abar = p.abar();
  for (int i = 0; i <= n && !out.in_first; ++i) {
    const Rat iq1 = rat(i, n);
    if (iq1 > ir1) break;
    const Rat iq2 = (iq - (1 - kappa) * iq1) / kappa;
    if (iq2 < 0 || iq2 > ir2) continue;
    // A_eps > abar for some small eps is the same as A > abar.
    if ((1 - kappa) * a_at(ir1, iq1) + kappa * a_at(ir2, iq2) > abar) {
      out.in_first = true;
      out.witness = std::make_pair(iq1, iq2);
    }
  }
  if (iq <= ir1 && iq <= ir2) {
    const Rat a1 = a_at(ir1, iq), a2 = a_at(ir2, iq);
    const Rat base = (1 - kappa) * a1 + kappa * a2;
    const Rat c = (1 - kappa) * exc(ir1, iq) + kappa * exc(ir2, iq);
    if (c == 0) {
      out.in_second = base == abar && a1 != p.alpha1 && a2 != p.alpha2;
    } else {
      const Rat eps = (base - abar) / c;
      if (eps > 0) {
        const Rat e1 = a1 - eps * exc(ir1, iq), e2 = a2 - eps * exc(ir2, iq);
        out.in_second = e1 != p.alpha1 && e2 != p.alpha2;
      }
    }
  }
  return out;
}

}  // namespace gnsym
