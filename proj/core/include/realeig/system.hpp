#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "realeig/detail/zpoly.hpp"
#include "realeig/form.hpp"
#include "realeig/realroots.hpp"

namespace realeig {

namespace detail {
struct SolutionChart;
}

/// A real projective solution of a ternary system, refinable on demand.
class RealSolution {
 public:
  enum class Kind { Affine, InfinityLine, InfinityPoint };

  RealSolution(std::shared_ptr<const detail::SolutionChart> chart, Kind kind, IsolatingInterval x,
               int multiplicity);

  Kind kind() const { return kind_; }
  /// Multiplicity of the x-coordinate as a root of the eliminant (1 = simple).
  int multiplicity() const { return multiplicity_; }
  /// Rational representative whose chart coordinate is within 2^-bits of the
  /// true one.
  std::array<Rational, 3> representative(int bits = 96) const;
  /// Exact representative when the solution is rational.
  std::optional<std::array<Rational, 3>> exact() const;
  /// Unit-norm double representative.
  std::array<double, 3> unit(int bits = 96) const;

 private:
  std::shared_ptr<const detail::SolutionChart> chart_;
  Kind kind_;
  IsolatingInterval x_;
  int multiplicity_;
};

struct SystemSolution {
  /// The common zero set is positive-dimensional.
  bool degenerate = false;
  /// Distinct complex projective solutions (0 when degenerate).
  int complex_count = 0;
  std::vector<RealSolution> real;
};

/// Common projective zeros of three ternary forms of one degree.
/// Throws GenericityError when `max_attempts` random charts fail.
SystemSolution solve_ternary_system(const std::array<Form, 3>& g, std::uint64_t seed = 0,
                                    int max_attempts = 32);

/// Random integer matrix with determinant 1 (product of unit triangular factors).
Matrix3 random_unimodular(std::uint64_t seed, int range = 2);

namespace detail {

struct SolutionChart {
  Matrix3 transform;
  ZPoly affine;    // squarefree: x-coordinates of affine solutions
  UniPoly c0, c1;  // y = -c0(x) / c1(x) on the roots of `affine`
  ZPoly infinity;  // squarefree: [x : 1 : 0] solutions
};

}  // namespace detail

}  // namespace realeig
