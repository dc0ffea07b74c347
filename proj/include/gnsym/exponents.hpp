#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnsym/rational.hpp"

namespace gnsym {

// 1/p for p in [1, inf]; p = inf is the value 0.
class RecipExponent {
 public:
  RecipExponent() = default;
  explicit RecipExponent(Rat value);
  static RecipExponent of_exponent(const Rat& p);
  static RecipExponent parse(std::string_view text);
  static RecipExponent infinity() { return RecipExponent(Rat(0)); }

  const Rat& value() const { return value_; }
  RecipExponent dual() const { return RecipExponent(Rat(1 - value_)); }
  bool is_infinite() const { return value_ == 0; }
  // "inf", "2", "3/2"
  std::string exponent_string() const;

  friend bool operator==(const RecipExponent& a, const RecipExponent& b) { return a.value_ == b.value_; }

 private:
  Rat value_{0};
};

struct SymbolProfile {
  int d = 1;
  int k = 1;  // ignored when d == 1
  Rat alpha1{0}, alpha2{0};
  Rat s1{0}, s2{0};
  Rat kappa{0};

  Rat abar() const { return Rat((1 - kappa) * alpha1 + kappa * alpha2); }
  Rat sbar() const { return Rat((1 - kappa) * s1 + kappa * s2); }
  SymbolProfile with_kappa(const Rat& k2) const {
    SymbolProfile p = *this;
    p.kappa = k2;
    return p;
  }
  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

// The (alpha1, alpha2, s1, s2, k) = (1, 0, s, 0, d-1) profile of |D|^s - 1 against the identity.
SymbolProfile sphere_profile(int d, const Rat& s, const Rat& kappa);

enum class Status { Strong, WeakTypeOnly, Fails, OutOfScope };
std::string to_string(Status s);

struct Condition {
  std::string id;
  bool satisfied = false;
  std::string text;
};

struct Verdict {
  Status status = Status::OutOfScope;
  std::vector<Condition> reasons;
  std::optional<Rat> value;  // exponent carried by wave/Schroedinger/dyadic verdicts
  std::string value_label;

  bool strong() const { return status == Status::Strong; }
  const Condition* find(const std::string& id) const;
};

struct RegionPolyline {
  std::vector<std::pair<Rat, Rat>> vertices;
  std::string label;
  std::string kind;  // "boundary", "exceptional", "level", "region"
};

// ---- A-calculus ---------------------------------------------------------

// The eight affine pieces A0, A1, A2, A3, A4 and the duals A1', A2', A3', A4'.
// Kept public for the region renderer and the tests.
struct APiece {
  std::string name;
  Rat cx, cy, c0;  // value = cx * (1/p) + cy * (1/q) + c0
  Rat at(const Rat& ip, const Rat& iq) const { return Rat(cx * ip + cy * iq + c0); }
};
std::vector<APiece> a_pieces(int d, int k);

Rat big_a(const RecipExponent& ip, const RecipExponent& iq, int d, int k);
bool in_exceptional_set(const RecipExponent& ip, const RecipExponent& iq, int k);
Rat a_eps(const RecipExponent& ip, const RecipExponent& iq, int d, int k, const Rat& eps);

// ---- admissibility checkers --------------------------------------------

Verdict check_gn_sphere(int d, const Rat& s, const Rat& kappa, const RecipExponent& ir,
                        const RecipExponent& iq);
Verdict check_gn_1d(const Rat& kappa, const Rat& s, const RecipExponent& iq,
                    const RecipExponent& ir1, const RecipExponent& ir2);
Verdict check_large_freq(const SymbolProfile& profile, const RecipExponent& iq,
                         const RecipExponent& ir1, const RecipExponent& ir2);
Verdict check_gn1d_general(const SymbolProfile& profile, const RecipExponent& iq,
                           const RecipExponent& ir1, const RecipExponent& ir2);
Verdict check_gn_highd_general(const SymbolProfile& profile, const RecipExponent& iq,
                               const RecipExponent& ir);
Verdict check_local_gn(int d, const Rat& s, const Rat& kappa, const RecipExponent& iq,
                       const RecipExponent& ir);
// Existential search over kappa1, kappa2 in {0, kappa/steps, ..., kappa}. A hit is a proof of
// admissibility; a miss only means none was found on this grid.
Verdict check_local_gn_general(const SymbolProfile& profile, const RecipExponent& iq,
                               const RecipExponent& ir1, const RecipExponent& ir2, int steps);

// Critical-frequency halves used by the general checkers and by the local search.
Verdict critical_part_1d(const SymbolProfile& profile, const RecipExponent& iq,
                         const RecipExponent& ir1, const RecipExponent& ir2);
Verdict critical_part_highd(const SymbolProfile& profile, const RecipExponent& iq,
                            const RecipExponent& ir);

Verdict wave_exponent(int d, const Rat& kappa);
Verdict schroedinger_exponent(int d, const Rat& kappa);

// Dyadic slab bound 2^{-j A_eps(p,q)}: Strong off the exceptional set, WeakTypeOnly on it.
Verdict check_dyadic_slab(const RecipExponent& ip, const RecipExponent& iq, int d, int k,
                          const Rat& eps);

// Research mode: rational-grid search for witnesses (q1, q2) of the first two critical sets.
// Partial and non-authoritative; the other sets are not searched.
struct ResearchResult {
  bool in_first = false;
  bool in_second = false;
  std::optional<std::pair<Rat, Rat>> witness;  // (1/q1, 1/q2)
  std::string label = "non-authoritative grid search";
};
ResearchResult research_critical_search(const SymbolProfile& profile, const RecipExponent& iq,
                                        const RecipExponent& ir1, const RecipExponent& ir2, int n);

// ---- region geometry ----------------------------------------------------

struct RegionParams {
  int d = 2;
  int k = 1;
  Rat s{1}, kappa{0};
  Rat alpha1{1}, alpha2{0}, s1{1}, s2{0};
};

// checker ids: "acalc", "alevel", "sphere", "generalhd", "local"
std::vector<RegionPolyline> region_boundary(const std::string& checker_id, const RegionParams& params);

}  // namespace gnsym
