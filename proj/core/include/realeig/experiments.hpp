#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realeig/eigen.hpp"
#include "realeig/form.hpp"
#include "realeig/random.hpp"
#include "realeig/topology.hpp"

namespace realeig {

struct SampleSpec {
  int n = 2;
  int d = 4;
  long count = 1;
  std::uint64_t seed = 0;
  /// Significant bits kept when rounding sampled coefficients to rationals.
  int rational_precision_bits = 53;
};

/// Sample `index` of the stream: coefficient of each monomial is
/// sqrt(multinomial weight) * N(0,1), drawn in exponent order (x-degree
/// descending, then y-degree descending).
Form sample_bombieri(const SampleSpec& spec, std::uint64_t index);
std::vector<Form> sample_bombieri(const SampleSpec& spec);

enum class Conditioner { RealRoots, Ovals };

/// Outcome of the full pipeline on one form.
struct SampleOutcome {
  bool rejected = false;
  std::string reject_reason;
  int row = 0;  // q or c
  int t = 0;
  bool nested = false;
  BoundVerdict verdict;
  std::optional<MorseCounts> morse;
};

struct PipelineOptions {
  bool morse = false;
  std::uint64_t seed = 0;
};

/// Binary forms: q and t.  Ternary forms: topology (c, nesting) and t.
/// Degenerate, singular or non-generic samples come back rejected.
SampleOutcome evaluate_sample(const Form& f, Conditioner cond, const PipelineOptions& options = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for k successes in n trials.
Interval wilson_interval(long k, long n, double z = 1.959963984540054);

struct TableResult {
  SampleSpec spec;
  Conditioner conditioner = Conditioner::RealRoots;
  /// counts[row][t]
  std::map<int, std::map<int, long>> counts;
  long rejected = 0;
  std::map<std::string, long> reject_reasons;
  long violations = 0;

  std::string row_label() const { return conditioner == Conditioner::RealRoots ? "q" : "c"; }
  long accepted() const;
  long row_total(int row) const;
  long column_total(int t) const;
  long count(int row, int t) const;
  /// P(t | row); 0 for an empty row.
  double probability(int row, int t) const;
  /// Unconditional P(t) among accepted samples.
  double marginal(int t) const;
  double mean_t() const;

  /// Columns row_label, col_label, count, probability, ci_low, ci_high.
  std::string to_csv() const;
  std::string to_json() const;
};

struct TableOptions {
  int threads = 1;
  std::function<void(long done)> progress;
};

TableResult run_table(const SampleSpec& spec, Conditioner cond, const TableOptions& options = {});

enum class Parity { Even, Odd };

struct FourierSpec {
  int t = 4;
  Rational s = 0;
  Parity parity = Parity::Even;
  int d = 4;
};

/// Even t: (1 + cos 2θ/2) + s (cos tθ + sin tθ) as a degree-t form.
/// Odd t: cos θ times the even construction at frequency t-1.
/// The result is multiplied by (x^2+y^2)^((d-t)/2).
Form fourier_binary(const FourierSpec& spec);

struct PerturbationSpec {
  Form base;
  Form g;
  Rational epsilon;
};

/// base + epsilon * g.
Form perturb(const PerturbationSpec& spec);

struct GalleryEntry {
  std::string name;
  Form form;
  std::optional<int> expected_c;
  std::optional<bool> expected_nested;
  std::optional<int> expected_t;
  std::string source;
  /// Singular member: only t is expected, and only if the system is not degenerate.
  bool singular = false;
  /// Only used as a perturbation base.
  bool base_only = false;
};

std::vector<GalleryEntry> gallery();
const GalleryEntry& gallery_entry(const std::string& name);

using FormMatrix = std::vector<std::vector<Form>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant of a square matrix of forms (all entries of one degree).
Form determinant(const FormMatrix& m);
/// det(a x + b y + c z) for square rational matrices.
Form pencil_determinant(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c);

RationalMatrix identity_matrix(int k);
/// Symmetric matrix with independent N(0,1) entries on and above the diagonal.
RationalMatrix random_symmetric(SplitMix64& rng, int k, int bits = 53);

/// det(x I + y M2 + z M3) with random symmetric k x k matrices.
Form random_hyperbolic(SplitMix64& rng, int k, int bits = 53);
/// Sum of `squares` squares of Bombieri-random ternary forms of degree `half`.
Form random_sos(SplitMix64& rng, int squares, int half, int bits = 53);
/// Product of d real linear binary forms with distinct roots.
Form random_real_linear_product(SplitMix64& rng, int d);

Form motzkin();
Form robinson();
Form choi_liu();

/// base + epsilon * (sum of 4 squares of random cubics).
Form perturbed_sextic(const Form& base, SplitMix64& rng, const Rational& epsilon = Rational(1, 100), int bits = 53);

struct NumericOracleOptions {
  int starts = 10000;
  std::uint64_t seed = 0;
  /// Antipodal classes closer than this are merged.
  double cluster_tolerance = 1e-6;
};

/// Real eigenvectors of a ternary form found by damped Newton iterations on
/// grad f = lambda x, |x| = 1 from random sphere starts, clustered up to sign.
std::vector<std::array<double, 3>> numeric_eigenvectors(const Form& f, const NumericOracleOptions& options = {});

}  // namespace realeig
