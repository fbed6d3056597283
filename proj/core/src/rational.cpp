#include "realeig/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace realeig {

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return r;
}

Rational round_to_rational(double v, int bits) {
  if (!std::isfinite(v)) throw std::invalid_argument("round_to_rational: non-finite value");
  if (v == 0.0) return Rational(0);
  if (bits >= 53) return Rational(v);
  if (bits < 1) throw std::invalid_argument("round_to_rational: bits must be positive");
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, 0.5 <= |mant| < 1
  double scaled = std::nearbyint(std::ldexp(mant, bits));
  Rational r(scaled);
  r *= pow2(exp - bits);
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  // decimal with optional fraction and exponent
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  int frac_digits = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal: " + s);
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("bad rational literal: " + s);
    exp10 = std::stol(s.substr(i + 1));
  }
  Rational r{Integer(digits, 10)};
  exp10 -= frac_digits;
  Integer ten = 10;
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0) {
    r *= scale;
  } else {
    r /= scale;
  }
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace realeig
