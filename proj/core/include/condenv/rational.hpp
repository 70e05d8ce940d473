#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace condenv {

using Rational = mpq_class;

// Accepts "p/q", "p" and "-p/q". Anything with a decimal point or exponent is rejected.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p" form.
std::string to_string(const Rational& q);

// Fixed-point rendering used for annotations only.
std::string to_decimal(const Rational& q, int digits = 6);

inline Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

}  // namespace condenv
