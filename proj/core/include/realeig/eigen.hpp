#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realeig/form.hpp"
#include "realeig/system.hpp"

namespace realeig {

struct CurveTopology;

/// n = 2: {y f_x - x f_y}.  n = 3: {y f_x - x f_y, z f_y - y f_z, z f_x - x f_z}.
struct EigenSystem {
  std::vector<Form> minors;
};

EigenSystem eigen_minors(const Form& f);

/// ((d-1)^n - 1)/(d-2) for d >= 3, n for d = 2, 1 for d = 1.
long long expected_complex_count(int n, int d);

struct EigenPoint {
  RealSolution solution;
  /// Unit representative; the third entry is 0 for binary forms.
  std::array<double, 3> unit{};
  /// d * f(unit), so that grad f(unit) = eigenvalue * unit.
  double eigenvalue = 0.0;
  /// Index of `unit` as a critical point of f on the sphere (0 max, 1 saddle,
  /// 2 min); unset when not classified or not Morse.
  std::optional<int> morse_index;
  /// Same for the antipode -unit.
  std::optional<int> antipode_morse_index;
};

/// Counts of maxima (c0), saddles (c1) and minima (c2) of f on the sphere.
struct MorseCounts {
  int c0 = 0;
  int c1 = 0;
  int c2 = 0;
  /// Sphere critical points whose tangent Hessian is numerically singular.
  /// When nonzero the counts are lower bounds.
  int non_morse = 0;

  bool morse_regular() const { return non_morse == 0; }
  int euler() const { return c0 - c1 + c2; }
};

struct EigenReport {
  int n = 0;
  int d = 0;
  long long expected_complex = 0;
  /// Distinct complex eigenpoints found (0 when degenerate).
  int complex_count = 0;
  bool degenerate = false;
  std::vector<EigenPoint> real_points;
  std::optional<MorseCounts> morse;

  int t() const { return static_cast<int>(real_points.size()); }
};

struct EigenOptions {
  std::uint64_t seed = 0;
  int max_attempts = 32;
};

EigenReport real_eigen_count_binary(const Form& f);
EigenReport real_eigen_count_ternary(const Form& f, const EigenOptions& options = {});
/// Dispatches on the number of variables.
EigenReport real_eigen_count(const Form& f, const EigenOptions& options = {});

struct MorseOptions {
  /// Relative threshold on |det| of the tangent Hessian below which a point is
  /// reported as not Morse.
  double tolerance = 1e-9;
};

/// Classifies every real eigenvector and its antipode on S^2 and stores the
/// indices in `report`.  Requires a non-degenerate ternary report.
MorseCounts classify_critical_points(const Form& f, EigenReport& report, const MorseOptions& options = {});

struct BoundVerdict {
  bool pass = true;
  /// Set when the report is degenerate and nothing was checked.
  bool skipped = false;
  std::vector<std::string> violations;
  /// Number of real roots (n = 2) or ovals (n = 3) used in the lower bound.
  std::optional<int> q;
  std::optional<int> c;
};

/// Binary: t >= max(q, 1), t <= d, t = d mod 2.
/// Ternary: t >= 2c+1 (d odd) or max(3, 2c+1) (d even) when topology is
/// given, t <= d^2 - d + 1, t odd.
BoundVerdict verify_bounds(const Form& f, const EigenReport& report, const CurveTopology* topo = nullptr);

}  // namespace realeig
