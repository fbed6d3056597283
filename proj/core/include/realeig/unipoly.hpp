#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "realeig/rational.hpp"

namespace realeig {

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// low degree first and the leading coefficient is nonzero unless the
/// polynomial is zero (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int k);
  /// x - r
  static UniPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  Rational operator()(const Rational& x) const { return evaluate(x); }
  int sign_at(const Rational& x) const { return sign(evaluate(x)); }
  double evaluate(double x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(UniPoly a, const Rational& c);
UniPoly operator*(const Rational& c, UniPoly a);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Quotient of a by b (remainder discarded).
UniPoly operator/(const UniPoly& a, const UniPoly& b);

/// Monic gcd computed with a primitive integer remainder sequence.
UniPoly gcd(const UniPoly& p, const UniPoly& q);
/// p / gcd(p, p'), monic.  Throws on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: element i collects the monic factor of multiplicity i+1.
std::vector<UniPoly> squarefree_factorization(const UniPoly& p);

/// Determinant of the Sylvester matrix, rows of p first.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// (a * b) mod m.
UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m);

}  // namespace realeig
