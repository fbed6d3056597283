#pragma once

#include <random>

#include "realeig/form.hpp"

namespace testing_helpers {

using realeig::Form;
using realeig::Rational;

inline Form X(int n = 3) { return Form::variable(n, 0); }
inline Form Y(int n = 3) { return Form::variable(n, 1); }
inline Form Z() { return Form::variable(3, 2); }
inline Form C(const Rational& c, int n = 3) { return Form::constant(n, c); }
inline Rational Q(long num, long den = 1) { return Rational(num, den); }

inline Rational random_rational(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 7);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Form random_form(std::mt19937_64& rng, int n, int d, int range = 20) {
  std::map<realeig::Exponent, Rational> terms;
  for (int i = d; i >= 0; --i) {
    if (n == 2) {
      terms[{i, d - i, 0}] = random_rational(rng, range);
    } else {
      for (int j = d - i; j >= 0; --j) terms[{i, j, d - i - j}] = random_rational(rng, range);
    }
  }
  return Form(n, d, terms);
}

}  // namespace testing_helpers
