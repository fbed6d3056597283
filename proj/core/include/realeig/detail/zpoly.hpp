#pragma once

// Primitive integer polynomials used on the hot paths (remainder sequences,
// sign evaluation).  Coefficients low degree first, trimmed.

#include <vector>

#include "realeig/rational.hpp"
#include "realeig/unipoly.hpp"

namespace realeig::detail {

using ZPoly = std::vector<Integer>;

inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
void trim(ZPoly& p);
Integer content(const ZPoly& p);
/// Divides by the positive content, so signs of values are preserved.
void make_primitive(ZPoly& p);
/// Positive rational multiple of p with coprime integer coefficients.
ZPoly to_primitive(const UniPoly& p);
UniPoly to_unipoly(const ZPoly& p);
ZPoly derivative(const ZPoly& p);
/// lc(b)^(deg a - deg b + 1) * a = q * b + r; returns r.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b);
/// Sign of p(num/den) for den > 0.
int sign_at(const ZPoly& p, const Integer& num, const Integer& den);
int sign_at(const ZPoly& p, const Rational& x);
/// Sign of p at +inf (at_plus) or -inf.
int sign_at_infinity(const ZPoly& p, bool at_plus);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(ZPoly a, ZPoly b);

/// Bareiss fraction-free determinant; the matrix is consumed.
Integer determinant(std::vector<std::vector<Integer>> m);
Rational determinant(std::vector<std::vector<Rational>> m);

/// Interpolating polynomial through (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys);

}  // namespace realeig::detail
