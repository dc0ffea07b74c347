#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnsym/exponents.hpp"

namespace gnsym::cli {

// Invalid configuration; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw key/value settings: JSON config first, then command-line flags on top.
using RawSettings = std::map<std::string, std::string>;

// Loads a JSON object whose values are strings, integers or booleans. Non-integer JSON numbers
// are rejected so that rational fields stay exact.
RawSettings load_config_file(const std::string& path);

struct RunConfig {
  std::string command;
  std::string target;  // checker id, region id or projector

  int d = 2;
  int k = 0;  // 0 means d - 1
  Rat alpha1{1}, alpha2{0}, s1{1}, s2{0}, kappa{0};
  std::optional<RecipExponent> p, q, r, r1, r2;
  Rat eps{Rat(1, 100)};
  int steps = 16;
  int research_n = 0;

  int n = 512;
  double L = 400.0;
  int j_lo = 2, j_hi = 6;
  int ensemble = 4;
  std::optional<RecipExponent> kernel_r;

  std::string family;
  std::vector<double> parameters;
  bool extremizer = false;
  int restarts = 4;
  int iterations = 200;

  std::string axes = "kappa-q";
  int scan_n = 24;
  int scan_max = 1000;
  bool quotients = false;

  std::optional<Rat> tolerance;
  std::uint64_t seed = 1;
  std::string out = "gnsym-out";
  int jobs = 0;

  int effective_k() const { return k == 0 ? d - 1 : k; }
  SymbolProfile profile() const;
  const RecipExponent& need(const std::optional<RecipExponent>& v, const char* name) const;
  // r1 and r2 fall back to r.
  RecipExponent need_r1() const;
  RecipExponent need_r2() const;
};

// Field-level validation; throws ConfigError naming the offending field.
RunConfig build_config(const std::string& command, const std::string& target, const RawSettings& raw);

// Known keys per command, used to reject typos.
const std::vector<std::string>& known_keys();

}  // namespace gnsym::cli
