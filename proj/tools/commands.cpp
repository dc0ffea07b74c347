#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "gnsym/parallel.hpp"
#include "gnsym/report.hpp"
#include "gnsym/serialize.hpp"
#include "svg.hpp"

namespace gnsym::cli {

namespace {

std::string path_in(const RunConfig& cfg, const std::string& name) { return cfg.out + "/" + name; }

double tolerance_or(const RunConfig& cfg, double fallback) {
  return cfg.tolerance ? to_double(*cfg.tolerance) : fallback;
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> v;
  for (int e = lo; e <= hi; ++e) v.push_back(std::ldexp(1.0, e));
  return v;
}

bool sphere_like(const RunConfig& cfg) { return cfg.alpha1 == 1 && cfg.alpha2 == 0 && cfg.s2 == 0; }

GnSetup setup_for(const RunConfig& cfg, const RecipExponent& iq, const RecipExponent& ir1, const RecipExponent& ir2) {
  if (sphere_like(cfg) && ir1 == ir2) return sphere_setup(cfg.d, cfg.s1, cfg.kappa, ir1, iq);
  return setup_from_profile(cfg.profile(), iq, ir1, ir2);
}

Json inputs_json(const RunConfig& cfg) {
  Json j;
  j["d"] = cfg.d;
  if (cfg.d >= 2) j["k"] = cfg.effective_k();
  j["alpha1"] = cfg.alpha1.get_str();
  j["alpha2"] = cfg.alpha2.get_str();
  j["s1"] = cfg.s1.get_str();
  j["s2"] = cfg.s2.get_str();
  j["kappa"] = cfg.kappa.get_str();
  auto put = [&](const char* key, const std::optional<RecipExponent>& v) {
    if (v) j[key] = v->exponent_string();
  };
  put("p", cfg.p);
  put("q", cfg.q);
  put("r", cfg.r);
  put("r1", cfg.r1);
  put("r2", cfg.r2);
  return j;
}

Verdict run_checker(const RunConfig& cfg, Json& extra) {
  const std::string& id = cfg.target;
  const SymbolProfile prof = cfg.profile();
  if (id == "sphere") return check_gn_sphere(cfg.d, cfg.s1, cfg.kappa, cfg.need(cfg.r, "r"), cfg.need(cfg.q, "q"));
  if (id == "oned") return check_gn_1d(cfg.kappa, cfg.s1, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2());
  if (id == "general1d" || id == "generalhd") {
    Verdict v = id == "general1d" ? check_gn1d_general(prof, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2())
                                  : check_gn_highd_general(prof, cfg.need(cfg.q, "q"), cfg.need(cfg.r, "r"));
    if (cfg.research_n > 0) {
      const auto rr = research_critical_search(prof, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2(), cfg.research_n);
      Json r;
      r["label"] = rr.label;
      r["in_first_set"] = rr.in_first;
      r["in_second_set"] = rr.in_second;
      if (rr.witness) r["witness"] = {rr.witness->first.get_str(), rr.witness->second.get_str()};
      extra["research"] = r;
    }
    return v;
  }
  if (id == "largefreq") return check_large_freq(prof, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2());
  if (id == "local") return check_local_gn(cfg.d, cfg.s1, cfg.kappa, cfg.need(cfg.q, "q"), cfg.need(cfg.r, "r"));
  if (id == "localgeneral")
    return check_local_gn_general(prof, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2(), cfg.steps);
  if (id == "wave") return wave_exponent(cfg.d, cfg.kappa);
  if (id == "schroedinger") return schroedinger_exponent(cfg.d, cfg.kappa);
  if (id == "slab") return check_dyadic_slab(cfg.need(cfg.p, "p"), cfg.need(cfg.q, "q"), cfg.d, cfg.effective_k(), cfg.eps);
  if (id == "weighted-wave" || id == "weighted-schroedinger") {
    const auto w = weighted_quotient_check(id == "weighted-wave" ? Model::Wave : Model::Schroedinger, cfg.d, cfg.kappa,
                                           cfg.need(cfg.q, "q"));
    extra["weighted"] = to_json(w);
    return w.verdict;
  }
  throw ConfigError("unknown checker '" + id +
                    "' (expected sphere, oned, general1d, generalhd, largefreq, local, localgeneral, wave, "
                    "schroedinger, slab, weighted-wave, weighted-schroedinger)");
}

void write_slope(const RunConfig& cfg, const std::string& stem, const SlopeReport& rep) {
  write_text(path_in(cfg, stem + ".json"), to_json(rep).dump(2) + "\n");
  write_text(path_in(cfg, stem + ".csv"), slope_csv(rep));
}

void print_slope_line(std::ostream& out, const std::string& stem, const SlopeReport& rep, bool ok) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: fitted %.4f predicted %s tol %.3g -> %s%s", stem.c_str(), rep.fitted_slope,
                rep.predicted.get_str().c_str(), rep.tolerance, to_string(rep.verdict).c_str(),
                ok ? "" : " (mismatch)");
  out << buf << "\n";
}

}  // namespace

int exit_for(Status s) {
  switch (s) {
    case Status::Strong: return exit_code::kStrong;
    case Status::WeakTypeOnly: return exit_code::kWeakTypeOnly;
    case Status::Fails: return exit_code::kFails;
    case Status::OutOfScope: return exit_code::kOutOfScope;
  }
  return exit_code::kInconsistent;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.target.empty()) throw ConfigError("check needs a checker name");
  Json extra = Json::object();
  const Verdict v = run_checker(cfg, extra);
  Json j;
  j["version"] = kReportVersion;
  j["checker"] = cfg.target;
  j["inputs"] = inputs_json(cfg);
  j["verdict"] = to_json(v);
  for (auto& [k, val] : extra.items()) j[k] = val;
  out << j.dump(2) << "\n";
  return exit_for(v.status);
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  const std::string id = cfg.target.empty() ? "acalc" : cfg.target;
  RegionParams rp;
  rp.d = cfg.d;
  rp.k = cfg.d >= 2 ? cfg.effective_k() : 1;
  rp.s = cfg.s1;
  rp.kappa = cfg.kappa;
  rp.alpha1 = cfg.alpha1;
  rp.alpha2 = cfg.alpha2;
  rp.s1 = cfg.s1;
  rp.s2 = cfg.s2;
  std::vector<RegionPolyline> lines;
  try {
    lines = region_boundary(id, rp);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  DiagramSpec spec;
  spec.title = "region " + id;
  const bool riesz = id == "acalc" || id == "alevel";
  spec.x_label = riesz ? "1/p" : "1/r";
  spec.y_label = "1/q";
  spec.polylines = lines;
  write_text(path_in(cfg, "region-" + id + ".svg"), render_svg(spec));
  Json j;
  j["version"] = kReportVersion;
  j["region"] = id;
  j["inputs"] = inputs_json(cfg);
  j["axes"] = {spec.x_label, spec.y_label};
  j["polylines"] = Json::array();
  for (const auto& p : lines) j["polylines"].push_back(to_json(p));
  write_text(path_in(cfg, "region-" + id + ".json"), j.dump(2) + "\n");
  out << j.dump(2) << "\n";
  return exit_code::kStrong;
}

int cmd_dyadic(const RunConfig& cfg, std::ostream& out) {
  std::vector<DyadicConfig> runs;
  if (cfg.target.empty()) {
    // Default suite: exact annulus kernel dilation, then slab decay at (2,6) and (2,2).
    DyadicConfig a;
    a.projector = "annulus";
    a.d = 2;
    a.n = 256;
    a.L = 64.0;
    a.j_lo = 0;
    a.j_hi = 3;
    a.kernel_ir = RecipExponent(Rat(1, 2));
    runs.push_back(a);
    DyadicConfig s;
    s.projector = "slab";
    s.d = 2;
    s.n = 512;
    s.L = 400.0;
    s.ip = RecipExponent(Rat(1, 2));
    s.iq = RecipExponent(Rat(1, 6));
    runs.push_back(s);
    s.iq = RecipExponent(Rat(1, 2));
    runs.push_back(s);
  } else {
    DyadicConfig c;
    c.projector = cfg.target;
    c.d = cfg.d;
    c.n = cfg.n;
    c.L = cfg.L;
    c.j_lo = cfg.j_lo;
    c.j_hi = cfg.j_hi;
    c.ip = cfg.need(cfg.p, "p");
    c.iq = cfg.need(cfg.q, "q");
    c.kernel_ir = cfg.kernel_r;
    c.ensemble = cfg.ensemble;
    runs.push_back(c);
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    DyadicConfig c = runs[i];
    c.seed = cfg.seed;
    c.tolerance = tolerance_or(cfg, 0.05);
    if (!cfg.target.empty()) c.ensemble = cfg.ensemble;
    const SlopeReport rep = fit_dyadic_decay(c);
    const std::string stem = rep.experiment + "-" + std::to_string(i + 1);
    write_slope(cfg, stem, rep);
    const bool ok = rep.verdict == Consistency::Consistent;
    all_ok = all_ok && ok;
    print_slope_line(out, stem, rep, ok);
  }
  return all_ok ? exit_code::kStrong : exit_code::kInconsistent;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  struct Run {
    SlopeConfig slope;
    GnSetup setup;
  };
  std::vector<Run> runs;
  const RecipExponent half(Rat(1, 2));
  if (cfg.family.empty()) {
    for (int q : {6, 4}) {
      Run r;
      r.slope.family = Family::Knapp;
      r.slope.parameters = powers_of_two(-7, -3);
      std::reverse(r.slope.parameters.begin(), r.slope.parameters.end());
      r.slope.tolerance = tolerance_or(cfg, 0.05);
      r.setup = sphere_setup(2, Rat(2), Rat(1, 2), half, RecipExponent(Rat(1, q)));
      runs.push_back(r);
    }
    Run r;
    r.slope.family = Family::Dilated;
    r.slope.parameters = powers_of_two(2, 5);
    r.slope.tolerance = tolerance_or(cfg, 0.08);
    r.setup = sphere_setup(2, Rat(1), Rat(1, 2), half, RecipExponent(Rat(1, 8)));
    runs.push_back(r);
  } else {
    Run r;
    if (cfg.family == "knapp")
      r.slope.family = Family::Knapp;
    else if (cfg.family == "annulus")
      r.slope.family = Family::Annulus;
    else if (cfg.family == "dilated")
      r.slope.family = Family::Dilated;
    else
      throw ConfigError("config field 'family': expected knapp, annulus or dilated");
    r.slope.parameters = cfg.parameters;
    if (r.slope.parameters.empty())
      r.slope.parameters = r.slope.family == Family::Dilated ? powers_of_two(2, 5) : std::vector<double>{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
    r.slope.tolerance = tolerance_or(cfg, 0.05);
    r.slope.d = cfg.d;
    r.setup = setup_for(cfg, cfg.need(cfg.q, "q"), cfg.need_r1(), cfg.need_r2());
    runs.push_back(r);
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const SlopeReport rep = slope_experiment(runs[i].slope, runs[i].setup);
    const std::string stem = rep.experiment + "-" + std::to_string(i + 1);
    write_slope(cfg, stem, rep);
    bool ok = rep.verdict == Consistency::Consistent;
    if (rep.checker_status && rep.predicted > 0) ok = ok && *rep.checker_status == Status::Fails;
    all_ok = all_ok && ok;
    print_slope_line(out, stem, rep, ok);
  }
  if (cfg.extremizer) {
    // Without explicit exponents: d = 1, (s, kappa, r1, r2, q) = (2, 1/2, 2, 2, inf).
    GnSetup setup = cfg.q ? setup_for(cfg, *cfg.q, cfg.need_r1(), cfg.need_r2())
                          : sphere_setup(1, Rat(2), Rat(1, 2), half, RecipExponent::infinity());
    ExtremizerConfig ec;
    ec.grid = Grid::make(setup.profile.d, setup.profile.d == 1 ? 128 : 64, 16.0);
    ec.restarts = cfg.restarts;
    ec.iterations = cfg.iterations;
    ec.seed = cfg.seed;
    const ExtremizerResult res = extremizer_search(setup, ec);
    write_text(path_in(cfg, "extremizer.json"), to_json(res).dump(2) + "\n");
    write_grid_function(res.function(), path_in(cfg, "extremizer.bin"), "extremizer best function");
    char buf[120];
    std::snprintf(buf, sizeof buf, "extremizer: best %.6f floor %.6f", res.best, res.floor_value);
    out << buf << "\n";
  }
  return all_ok ? exit_code::kStrong : exit_code::kInconsistent;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string id = cfg.target.empty() ? "sphere" : cfg.target;
  static const std::vector<std::string> ids = {"sphere", "oned", "general1d", "generalhd", "local"};
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw ConfigError("unknown scan checker '" + id + "' (expected sphere, oned, general1d, generalhd, local)");
  const int N = cfg.scan_n;

  // Rows: (kappa, 1/r, 1/q) in a fixed order.
  struct Row {
    Rat kappa, ir, iq;
  };
  std::vector<Row> rows;
  if (N > 0) {
    if (cfg.axes == "kappa-q") {
      const RecipExponent& r = cfg.need(cfg.r, "r");
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) rows.push_back({rat(i, N), r.value(), rat(j, N)});
    } else {
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) rows.push_back({cfg.kappa, rat(i, N), rat(j, N)});
    }
  }

  auto verdict_for = [&](const Row& row) {
    RunConfig c = cfg;
    c.kappa = row.kappa;
    const RecipExponent ir(row.ir), iq(row.iq);
    if (id == "sphere") return check_gn_sphere(c.d, c.s1, c.kappa, ir, iq);
    if (id == "oned") return check_gn_1d(c.kappa, c.s1, iq, ir, ir);
    if (id == "general1d") return check_gn1d_general(c.profile(), iq, ir, ir);
    if (id == "generalhd") return check_gn_highd_general(c.profile(), iq, ir);
    return check_local_gn(c.d, c.s1, c.kappa, iq, ir);
  };

  // Optional measured quotients: max over a fixed random ensemble, norms cached per exponent.
  struct Member {
    GridFunction u, p1u;
  };
  std::vector<Member> ensemble;
  if (cfg.quotients && !rows.empty()) {
    if (cfg.d > 2) throw ConfigError("config field 'quotients': measured quotients need d <= 2");
    const Grid g = Grid::make(cfg.d, cfg.d == 1 ? 256 : 64, 16.0);
    const GnSetup setup = setup_for(cfg, RecipExponent(Rat(1, 2)), RecipExponent(Rat(1, 2)), RecipExponent(Rat(1, 2)));
    for (int i = 0; i < 3; ++i) {
      GridFunction u = random_band_limited(g, cfg.seed + static_cast<std::uint64_t>(i), 0.25, 2.0);
      GridFunction p1u = apply_multiplier(u, setup.p1);
      ensemble.push_back({std::move(u), std::move(p1u)});
    }
  }
  std::map<Rat, std::vector<double>> norm_u, norm_p1;
  auto cached = [&](std::map<Rat, std::vector<double>>& cache, const Rat& ip, bool p1) -> const std::vector<double>& {
    auto it = cache.find(ip);
    if (it != cache.end()) return it->second;
    std::vector<double> v;
    for (const auto& m : ensemble) v.push_back(lp_norm(p1 ? m.p1u : m.u, to_double(ip)));
    return cache.emplace(ip, std::move(v)).first->second;
  };

  std::ostringstream csv;
  csv << "version,checker,d,k,kappa,ir,iq,ir1,ir2,status,quotient\n";
  std::size_t strong = 0;
  for (const auto& row : rows) {
    const Verdict v = verdict_for(row);
    strong += v.strong();
    std::string quotient;
    if (!ensemble.empty()) {
      const auto& nu = cached(norm_u, row.iq, false);
      const auto& n1 = cached(norm_p1, row.ir, true);
      const auto& n2 = cached(norm_u, row.ir, false);
      const double k = to_double(row.kappa);
      double best = 0.0;
      for (std::size_t i = 0; i < ensemble.size(); ++i)
        best = std::max(best, nu[i] / (std::pow(n1[i], 1.0 - k) * std::pow(n2[i], k)));
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", best);
      quotient = buf;
    }
    csv << kReportVersion << ',' << id << ',' << cfg.d << ',' << (cfg.d >= 2 ? cfg.effective_k() : 0) << ','
        << row.kappa.get_str() << ',' << row.ir.get_str() << ',' << row.iq.get_str() << ',' << row.ir.get_str() << ','
        << row.ir.get_str() << ',' << to_string(v.status) << ',' << quotient << '\n';
  }
  write_text(path_in(cfg, "scan.csv"), csv.str());
  Json j;
  j["version"] = kReportVersion;
  j["checker"] = id;
  j["axes"] = cfg.axes;
  j["N"] = N;
  j["rows"] = rows.size();
  j["strong_rows"] = strong;
  j["csv"] = path_in(cfg, "scan.csv");
  out << j.dump(2) << "\n";
  return exit_code::kStrong;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponent checkers and spectral experiments for GN-type multiplier inequalities", "gnsym"};
  app.require_subcommand(1);
  app.fallthrough();

  RawSettings flags;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  static const std::vector<std::string> globals = {"out", "seed", "tolerance", "jobs"};
  app.add_option("--out", flags["out"], "output directory (default gnsym-out)");
  app.add_option("--seed", flags["seed"], "RNG seed for random inputs and the extremizer");
  app.add_option("--tolerance", flags["tolerance"], "slope tolerance as a rational, e.g. 1/20");
  app.add_option("--jobs", flags["jobs"], "OpenMP threads; 0 keeps the runtime default");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"check", "run an exact admissibility checker"},
                      {"region", "render a region diagram (SVG + JSON polylines)"},
                      {"dyadic", "fit dyadic decay rates of projector norms"},
                      {"verify", "run GN-quotient slope experiments"},
                      {"scan", "tabulate checker verdicts over an exponent grid"}};
  std::map<std::string, std::string> targets;
  std::map<std::string, std::size_t> bool_flags;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("target", targets[s.name], "checker, region or projector id");
    for (const auto& key : known_keys()) {
      if (std::find(globals.begin(), globals.end(), key) != globals.end()) continue;
      if (key == "extremizer" || key == "quotients") {
        sub->add_flag("--" + key, bool_flags[std::string(s.name) + ":" + key]);
        continue;
      }
      sub->add_option("--" + key, flags[std::string(s.name) + ":" + key]);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kConfig;
  }

  std::string command;
  for (const auto& s : subs)
    if (app.got_subcommand(s.name)) command = s.name;

  try {
    RawSettings raw;
    if (!config_path.empty()) raw = load_config_file(config_path);
    for (const auto& [key, value] : flags) {
      if (value.empty()) continue;
      const auto colon = key.find(':');
      if (colon == std::string::npos)
        raw[key] = value;
      else if (key.substr(0, colon) == command)
        raw[key.substr(colon + 1)] = value;
    }
    for (const auto& [key, count] : bool_flags) {
      const auto colon = key.find(':');
      if (count > 0 && key.substr(0, colon) == command) raw[key.substr(colon + 1)] = "true";
    }
    const RunConfig cfg = build_config(command, targets[command], raw);
    par::set_threads(cfg.jobs);
    if (command == "check") return cmd_check(cfg, out);
    if (command == "region") return cmd_region(cfg, out);
    if (command == "dyadic") return cmd_dyadic(cfg, out);
    if (command == "verify") return cmd_verify(cfg, out);
    return cmd_scan(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInconsistent;
  }
}

}  // namespace gnsym::cli
