#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gnsym::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw ConfigError("config field '" + field + "': " + msg);
}

int as_int(const std::string& field, const std::string& text) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos != text.size()) fail(field, "'" + text + "' is not an integer");
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    fail(field, "'" + text + "' is not an integer");
  }
}

std::uint64_t as_u64(const std::string& field, const std::string& text) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size() || text.find('-') != std::string::npos) fail(field, "'" + text + "' is not an unsigned integer");
    return v;
  } catch (const std::logic_error&) {
    fail(field, "'" + text + "' is not an unsigned integer");
  }
}

Rat as_rat(const std::string& field, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

RecipExponent as_recip(const std::string& field, const std::string& text) {
  try {
    return RecipExponent(parse_exponent_reciprocal(text));
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

double as_double(const std::string& field, const std::string& text) {
  try {
    return to_double(parse_rational(text));
  } catch (const ParseError&) {
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) fail(field, "'" + text + "' is not a number");
    return v;
  } catch (const std::logic_error&) {
    fail(field, "'" + text + "' is not a number");
  }
}

bool as_bool(const std::string& field, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  fail(field, "'" + text + "' is not a boolean");
}

std::vector<double> as_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(as_double(field, item));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "d",      "k",          "alpha1",     "alpha2",   "s",        "s1",        "s2",    "kappa", "p",
      "q",      "r",          "r1",         "r2",       "eps",      "steps",     "research", "n",  "L",
      "j-lo",   "j-hi",       "ensemble",   "kernel-r", "family",   "params",    "extremizer", "restarts",
      "iterations", "axes",   "N",          "max-n",    "quotients", "tolerance", "seed",  "out",   "jobs"};
  return keys;
}

RawSettings load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file '" + path + "' must hold a JSON object");
  RawSettings raw;
  for (const auto& [key, v] : j.items()) {
    if (v.is_string())
      raw[key] = v.get<std::string>();
    else if (v.is_number_integer())
      raw[key] = std::to_string(v.get<long long>());
    else if (v.is_boolean())
      raw[key] = v.get<bool>() ? "true" : "false";
    else if (v.is_number_float())
      fail(key, "decimals are not accepted, write \"a/b\" as a string");
    else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) {
        if (!joined.empty()) joined += ",";
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      raw[key] = joined;
    } else {
      fail(key, "unsupported JSON value");
    }
  }
  return raw;
}

SymbolProfile RunConfig::profile() const {
  SymbolProfile p;
  p.d = d;
  p.k = d >= 2 ? effective_k() : 1;
  p.alpha1 = alpha1;
  p.alpha2 = alpha2;
  p.s1 = s1;
  p.s2 = s2;
  p.kappa = kappa;
  return p;
}

const RecipExponent& RunConfig::need(const std::optional<RecipExponent>& v, const char* name) const {
  if (!v) throw ConfigError(std::string("config field '") + name + "': required for " + command + " " + target);
  return *v;
}

RecipExponent RunConfig::need_r1() const { return r1 ? *r1 : need(r, "r1"); }
RecipExponent RunConfig::need_r2() const { return r2 ? *r2 : need(r, "r2"); }

RunConfig build_config(const std::string& command, const std::string& target, const RawSettings& raw) {
  RunConfig c;
  c.command = command;
  c.target = target;
  const auto& keys = known_keys();
  for (const auto& [key, value] : raw)
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(key, "unknown setting");

  auto get = [&](const char* key) -> const std::string* {
    auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
  };
  if (auto v = get("d")) c.d = as_int("d", *v);
  if (auto v = get("k")) c.k = as_int("k", *v);
  if (auto v = get("alpha1")) c.alpha1 = as_rat("alpha1", *v);
  if (auto v = get("alpha2")) c.alpha2 = as_rat("alpha2", *v);
  if (auto v = get("s")) c.s1 = as_rat("s", *v);
  if (auto v = get("s1")) c.s1 = as_rat("s1", *v);
  if (auto v = get("s2")) c.s2 = as_rat("s2", *v);
  if (auto v = get("kappa")) c.kappa = as_rat("kappa", *v);
  if (auto v = get("p")) c.p = as_recip("p", *v);
  if (auto v = get("q")) c.q = as_recip("q", *v);
  if (auto v = get("r")) c.r = as_recip("r", *v);
  if (auto v = get("r1")) c.r1 = as_recip("r1", *v);
  if (auto v = get("r2")) c.r2 = as_recip("r2", *v);
  if (auto v = get("eps")) c.eps = as_rat("eps", *v);
  if (auto v = get("steps")) c.steps = as_int("steps", *v);
  if (auto v = get("research")) c.research_n = as_int("research", *v);
  if (auto v = get("n")) c.n = as_int("n", *v);
  if (auto v = get("L")) c.L = as_double("L", *v);
  if (auto v = get("j-lo")) c.j_lo = as_int("j-lo", *v);
  if (auto v = get("j-hi")) c.j_hi = as_int("j-hi", *v);
  if (auto v = get("ensemble")) c.ensemble = as_int("ensemble", *v);
  if (auto v = get("kernel-r")) c.kernel_r = as_recip("kernel-r", *v);
  if (auto v = get("family")) c.family = *v;
  if (auto v = get("params")) c.parameters = as_list("params", *v);
  if (auto v = get("extremizer")) c.extremizer = as_bool("extremizer", *v);
  if (auto v = get("restarts")) c.restarts = as_int("restarts", *v);
  if (auto v = get("iterations")) c.iterations = as_int("iterations", *v);
  if (auto v = get("axes")) c.axes = *v;
  if (auto v = get("N")) c.scan_n = as_int("N", *v);
  if (auto v = get("max-n")) c.scan_max = as_int("max-n", *v);
  if (auto v = get("quotients")) c.quotients = as_bool("quotients", *v);
  if (auto v = get("tolerance")) c.tolerance = as_rat("tolerance", *v);
  if (auto v = get("seed")) c.seed = as_u64("seed", *v);
  if (auto v = get("out")) c.out = *v;
  if (auto v = get("jobs")) c.jobs = as_int("jobs", *v);

  if (c.d < 1) fail("d", "must be at least 1");
  if (c.k < 0 || (c.d >= 2 && c.k > c.d - 1)) fail("k", "must lie in {1,...,d-1} (0 selects d-1)");
  if (c.kappa < 0 || c.kappa > 1) fail("kappa", "must lie in [0,1]");
  if (c.eps <= 0) fail("eps", "must be positive");
  if (c.steps < 1) fail("steps", "must be positive");
  if (c.research_n < 0) fail("research", "must be nonnegative");
  if (c.n < 8 || (c.n & (c.n - 1)) != 0) fail("n", "must be a power of two >= 8");
  if (!(c.L > 0)) fail("L", "must be positive");
  if (c.j_hi < c.j_lo) fail("j-hi", "must be >= j-lo");
  if (c.ensemble < 0) fail("ensemble", "must be nonnegative");
  if (c.restarts < 1) fail("restarts", "must be at least 1");
  if (c.iterations < 1) fail("iterations", "must be at least 1");
  if (c.axes != "kappa-q" && c.axes != "r-q") fail("axes", "expected kappa-q or r-q");
  if (c.scan_n < 0) fail("N", "must be nonnegative");
  if (c.scan_max < 1) fail("max-n", "must be positive");
  if (c.scan_n > c.scan_max)
    fail("N", "grid step 1/" + std::to_string(c.scan_n) + " exceeds the limit N <= " + std::to_string(c.scan_max));
  if (c.tolerance && *c.tolerance <= 0) fail("tolerance", "must be positive");
  if (c.jobs < 0) fail("jobs", "must be nonnegative");
  if (c.out.empty()) fail("out", "must not be empty");
  return c;
}

}  // namespace gnsym::cli
