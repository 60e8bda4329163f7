#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "apw/errors.hpp"

namespace apw {

// Exact scalars. mpq_class keeps the canonical form we rely on everywhere:
// reduced fraction, positive denominator, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with optional leading '-'.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// lcm of denominators; 1 for an all-integer (or empty) vector.
Integer denominator_lcm(const std::vector<Rational>& v);

}  // namespace apw
