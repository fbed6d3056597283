#pragma once

#include <cstdint>
#include <vector>

#include "realeig/form.hpp"

namespace realeig {

/// Topology of the real zero set of a smooth ternary form in RP^2.
struct CurveTopology {
  int components = 0;
  int ovals = 0;
  bool has_pseudoline = false;
  /// parent[i] is the oval immediately containing oval i, or -1.
  std::vector<int> parent;
  bool smooth_certified = false;

  /// Depth of oval i in the nesting forest (0 for outermost).
  int depth(int i) const;
  int max_depth() const;
  /// True when some oval contains another.
  bool nested() const;
};

struct TopologyOptions {
  std::uint64_t seed = 0;
  int max_attempts = 64;
  /// Run assert_smooth first; when false the caller vouches for smoothness.
  bool check_smooth = true;
};

/// No nonzero real point where f_x = f_y = f_z = 0.  A positive-dimensional
/// singular locus counts as singular.
bool assert_smooth(const Form& f, std::uint64_t seed = 0);

/// Throws InputError on singular input and GenericityError when no usable
/// chart is found.
CurveTopology count_components(const Form& f, const TopologyOptions& options = {});

/// (1 - (-1)^d)/2 <= components <= (d-1)(d-2)/2 + 1.
bool harnack_check(int d, const CurveTopology& topo);
bool harnack_check(int d, int components);

}  // namespace realeig
