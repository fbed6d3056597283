#pragma once

#include <optional>
#include <vector>

#include "realeig/detail/zpoly.hpp"
#include "realeig/form.hpp"
#include "realeig/rational.hpp"
#include "realeig/unipoly.hpp"

namespace realeig {

/// Missing bound means -inf (lower) or +inf (upper).
using Bound = std::optional<Rational>;

/// Sturm sequence of the squarefree part of p: p, p', then negated
/// remainders, each scaled by a positive constant to keep integer
/// coefficients primitive.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Sign variations; zeros are skipped.
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool plus) const;
  /// Distinct real roots in (a, b].
  int count(const Bound& a, const Bound& b) const;
  int count_all() const { return count(std::nullopt, std::nullopt); }

  int sign_at(const Rational& x) const { return detail::sign_at(seq_.front(), x); }
  /// The squarefree polynomial the sequence was built from (primitive).
  const detail::ZPoly& base() const { return seq_.front(); }
  std::vector<UniPoly> polys() const;

 private:
  std::vector<detail::ZPoly> seq_;
};

/// Rational interval holding exactly one real root of a squarefree
/// polynomial.  Without an exact hit the root lies in the open interval and
/// the endpoints are not roots.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact_hit;

  bool is_exact() const { return exact_hit.has_value(); }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return exact_hit ? *exact_hit : realeig::midpoint(lo, hi); }
  double approx() const { return to_double(midpoint()); }
};

/// Number of distinct real roots of p in (a, b].  Throws on p = 0.
int sturm_count(const UniPoly& p, const Bound& a = std::nullopt, const Bound& b = std::nullopt);

/// Sorted, disjoint isolating intervals with dyadic endpoints, one per
/// distinct real root.  Dyadic roots met during bisection are exact hits.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

/// Shrinks iv to width <= `width` by sign bisection.  p must be squarefree
/// and iv must isolate one of its roots; throws std::domain_error if the
/// endpoint signs do not bracket a root.
IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rational& width);

/// Distinct real points of {f = 0} on the real projective line.
int count_projective_real_roots(const Form& f);

/// Power of two bounding the absolute value of every complex root.
Rational cauchy_bound(const UniPoly& p);

/// Isolation and refinement against one cached squarefree polynomial.
class RootIsolator {
 public:
  explicit RootIsolator(const UniPoly& p);

  const std::vector<IsolatingInterval>& roots() const { return roots_; }
  IsolatingInterval refine(const IsolatingInterval& iv, const Rational& width) const;
  int sign_at(const Rational& x) const { return detail::sign_at(base_, x); }

 private:
  detail::ZPoly base_{1};
  std::vector<IsolatingInterval> roots_;
};

namespace detail {
/// Isolation of the real roots of a squarefree integer polynomial by
/// Descartes' rule of signs on dyadic subintervals.
std::vector<IsolatingInterval> isolate_squarefree(ZPoly p);
IsolatingInterval refine_z(const ZPoly& p, IsolatingInterval iv, const Rational& width);
}

}  // namespace realeig
