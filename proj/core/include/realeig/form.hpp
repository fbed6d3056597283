#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <variant>

#include "realeig/bipoly.hpp"
#include "realeig/rational.hpp"
#include "realeig/unipoly.hpp"

namespace realeig {

/// Exponent tuple; binary forms keep the third entry at zero.
using Exponent = std::array<int, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Homogeneous polynomial in 2 or 3 variables with exact rational
/// coefficients.  The zero form keeps its nominal degree.
class Form {
 public:
  Form() : Form(3, 0) {}
  Form(int num_vars, int degree);
  /// Validates arity/degree of every term and drops zero coefficients.
  Form(int num_vars, int degree, std::map<Exponent, Rational> terms);

  static Form variable(int num_vars, int index);
  static Form constant(int num_vars, const Rational& c);
  /// a0*x + a1*y (+ a2*z)
  static Form linear(int num_vars, const std::array<Rational, 3>& a);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Degree d-1 partial derivative (zero form of degree 0 when d = 0).
  Form partial(int var) const;

  /// f(T x): substitutes x_i -> sum_j T[i][j] x_j.
  Form substitute(const Matrix3& t) const;

  /// Positive rational multiple with coprime integer coefficients.
  Form primitive() const;
  /// Same form viewed with more variables (binary -> ternary).
  Form with_num_vars(int num_vars) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& c);

  friend bool operator==(const Form& a, const Form& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  int num_vars_;
  int degree_;
  std::map<Exponent, Rational> terms_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator*(const Form& a, const Form& b);
Form operator*(Form a, const Rational& c);
Form operator*(const Rational& c, Form a);
Form power(const Form& f, int k);

/// Euler operator sum_i x_i * df/dx_i, equal to d*f.
Form euler_operator(const Form& f);

struct BinaryChart {
  UniPoly poly;  // in the remaining variable
  int drop = 0;  // d - deg(poly): multiplicity of the point where var = 0
};

struct TernaryChart {
  BiPoly poly;   // in the two remaining variables, in index order
  int drop = 0;  // d - total degree of poly
};

/// Sets variable `var` to 1.  Throws std::domain_error on the zero form.
BinaryChart dehomogenize_binary(const Form& f, int var);
TernaryChart dehomogenize_ternary(const Form& f, int var);
std::variant<BinaryChart, TernaryChart> dehomogenize(const Form& f, int var);

/// Inverse charts: the dehomogenized variable is re-inserted at index `var`.
Form homogenize(const UniPoly& p, int degree, int var = 1);
Form homogenize(const BiPoly& p, int degree, int var = 2);

Rational evaluate(const Form& f, std::span<const Rational> point);
Rational evaluate(const UniPoly& p, std::span<const Rational> point);
Rational evaluate(const BiPoly& p, std::span<const Rational> point);

Matrix3 identity3();
Rational determinant(const Matrix3& m);
Matrix3 inverse(const Matrix3& m);
std::array<Rational, 3> transform_point(const Matrix3& m, const std::array<Rational, 3>& v);

}  // namespace realeig
