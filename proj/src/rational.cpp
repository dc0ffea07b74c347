#include "gnsym/rational.hpp"

#include <cctype>

namespace gnsym {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
      s.find('E') != std::string_view::npos)
    throw ParseError("'" + std::string(text) + "': decimals are not accepted, write a/b");
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("'" + std::string(text) + "' is not a rational of the form a/b");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("'" + std::string(text) + "' has zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

Rat parse_exponent_reciprocal(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "Inf" || s == "infinity") return Rat(0);
  Rat p = parse_rational(s);
  if (p < 1) throw ParseError("'" + std::string(text) + "': exponent must lie in [1, inf]");
  Rat r = 1 / p;
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace gnsym
