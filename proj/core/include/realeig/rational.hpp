#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace realeig {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Rounds a finite double to the nearest rational with at most `bits`
// significant binary digits.  bits >= 53 returns the double exactly.
Rational round_to_rational(double v, int bits = 53);

// 2^e as a rational; e may be negative.
Rational pow2(int e);

Rational pow(const Rational& base, unsigned exp);

// Accepts "a", "-a", "a/b" and decimal "1.25" / "1e-3" forms.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

}  // namespace realeig
