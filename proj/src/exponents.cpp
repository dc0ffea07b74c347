#include <stdexcept>

#include "gnsym/exponents.hpp"

namespace gnsym {

RecipExponent::RecipExponent(Rat value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1)
    throw std::invalid_argument("reciprocal exponent " + value_.get_str() + " outside [0,1]");
}

RecipExponent RecipExponent::of_exponent(const Rat& p) {
  if (p < 1) throw std::invalid_argument("exponent " + p.get_str() + " below 1");
  return RecipExponent(Rat(1 / p));
}

RecipExponent RecipExponent::parse(std::string_view text) {
  return RecipExponent(parse_exponent_reciprocal(text));
}

std::string RecipExponent::exponent_string() const {
  if (value_ == 0) return "inf";
  Rat p = 1 / value_;
  return p.get_str();
}

void SymbolProfile::validate() const {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (d >= 2 && (k < 1 || k > d - 1)) throw std::invalid_argument("k must lie in {1,...,d-1}");
  if (alpha1 <= -1 || alpha2 <= -1) throw std::invalid_argument("vanishing orders must exceed -1");
  if (kappa < 0 || kappa > 1) throw std::invalid_argument("kappa must lie in [0,1]");
}

SymbolProfile sphere_profile(int d, const Rat& s, const Rat& kappa) {
  SymbolProfile p;
  p.d = d;
  p.k = d >= 2 ? d - 1 : 1;
  p.alpha1 = 1;
  p.alpha2 = 0;
  p.s1 = s;
  p.s2 = 0;
  p.kappa = kappa;
  return p;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Strong: return "Strong";
    case Status::WeakTypeOnly: return "WeakTypeOnly";
    case Status::Fails: return "Fails";
    case Status::OutOfScope: return "OutOfScope";
  }
  return "?";
}

const Condition* Verdict::find(const std::string& id) const {
  for (const auto& c : reasons)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<APiece> a_pieces(int d, int k) {
  const Rat half_k2 = rat(k + 2, 2);
  std::vector<APiece> base = {
      {"A0", 0, 0, 1},
      {"A1", half_k2, -half_k2, 0},
      {"A2", 0, -(k + 1), half_k2},
      {"A3", 0, -(2 * d - k - 1), rat(2 * d - k, 2)},
      {"A4", half_k2, Rat(-half_k2 - (2 * d - k - 2)), rat(2 * d - k - 2, 2)},
  };
  std::vector<APiece> out;
  for (const auto& p : base) {
    out.push_back(p);
    // A1 is self-dual and A0 is constant, so only A2..A4 get a distinct dual.
    if (p.name == "A0" || p.name == "A1") continue;
    // A(q', p'): substitute 1/p -> 1 - 1/q and 1/q -> 1 - 1/p.
    out.push_back({p.name + "'", Rat(-p.cy), Rat(-p.cx), Rat(p.cx + p.cy + p.c0)});
  }
  return out;
}

static void require_a_domain(const RecipExponent& ip, const RecipExponent& iq, int d, int k) {
  if (d < 2) throw std::invalid_argument("big_a needs d >= 2");
  if (k < 1 || k > d - 1) throw std::invalid_argument("big_a needs 1 <= k <= d-1");
  if (iq.value() > ip.value())
    throw std::invalid_argument("big_a needs p <= q (1/q <= 1/p); other pairs are not translation-invariant bounds");
}

Rat big_a(const RecipExponent& ip, const RecipExponent& iq, int d, int k) {
  require_a_domain(ip, iq, d, k);
  auto pieces = a_pieces(d, k);
  Rat best = pieces.front().at(ip.value(), iq.value());
  for (const auto& p : pieces) best = min_of(best, p.at(ip.value(), iq.value()));
  return best;
}

bool in_exceptional_set(const RecipExponent& ip, const RecipExponent& iq, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Rat& x = ip.value();
  const Rat& y = iq.value();
  const bool first = x == rat(k + 2, 2 * (k + 1)) && y <= rat(k * k, 2 * (k + 1) * (k + 2));
  const bool second = y == rat(k, 2 * (k + 1)) && x >= rat(k * k + 6 * k + 4, 2 * (k + 1) * (k + 2));
  return first || second;
}

Rat a_eps(const RecipExponent& ip, const RecipExponent& iq, int d, int k, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (d == 1) return Rat(ip.value() - iq.value());
  Rat a = big_a(ip, iq, d, k);
  if (in_exceptional_set(ip, iq, k)) a -= eps;
  return a;
}

}  // namespace gnsym
