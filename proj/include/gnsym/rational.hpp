#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnsym {

using Rat = mpq_class;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "a", "-a", "a/b". Decimals and exponent notation are rejected so that
// exact inputs stay exact.
Rat parse_rational(std::string_view text);

// Accepts an exponent p in [1, inf] written as "a/b" or "inf" and returns 1/p.
Rat parse_exponent_reciprocal(std::string_view text);

std::string to_string(const Rat& x);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Rat& min_of(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max_of(const Rat& a, const Rat& b) { return b > a ? b : a; }

inline double to_double(const Rat& x) { return x.get_d(); }

}  // namespace gnsym
