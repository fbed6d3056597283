#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realeig/rational.hpp"
#include "realeig/unipoly.hpp"

namespace realeig {

/// Sparse polynomial in two variables (index 0 and 1, printed x and y),
/// not necessarily homogeneous.  Used for affine charts of ternary forms.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(std::map<Key, Rational> terms);

  /// Builds sum_k coeffs[k](other) * var^k.
  static BiPoly from_coefficients(const std::vector<UniPoly>& coeffs, int var);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;

  int degree_in(int var) const;
  int total_degree() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;
  /// Substitutes var = value; the result is a polynomial in the other variable.
  UniPoly specialize(int var, const Rational& value) const;
  /// Element k is the coefficient of var^k, a polynomial in the other variable.
  std::vector<UniPoly> coefficients_in(int var) const;

  BiPoly partial(int var) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(BiPoly a, const Rational& c);

/// Resultant with respect to `var` (Sylvester determinant, rows of p first);
/// a polynomial in the other variable.  Throws on zero input.
UniPoly resultant_wrt(const BiPoly& p, const BiPoly& q, int var);

/// Coefficients (var^0 .. var^k) of the k-th subresultant of p and q with
/// respect to `var`, built from the Sylvester-Habicht minors with p rows first.
/// Requires 0 <= k < min(deg_var p, deg_var q).
std::vector<UniPoly> subresultant_wrt(const BiPoly& p, const BiPoly& q, int var, int k);

}  // namespace realeig
