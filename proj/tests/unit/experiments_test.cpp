#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "realeig/experiments.hpp"
#include "realeig/parser.hpp"
#include "realeig/realroots.hpp"

using namespace realeig;
using namespace testing_helpers;

TEST(Sampling, DeterministicPerSeedAndIndex) {
  SampleSpec spec{.n = 3, .d = 3, .count = 5, .seed = 42};
  auto a = sample_bombieri(spec);
  auto b = sample_bombieri(spec);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(sample_bombieri(spec, 3), a[3]);
  EXPECT_NE(a[0], a[1]);
  spec.seed = 43;
  EXPECT_NE(sample_bombieri(spec, 0), a[0]);
}

TEST(Sampling, FullSupport) {
  Form f = sample_bombieri({.n = 3, .d = 4, .seed = 1}, 0);
  EXPECT_EQ(f.terms().size(), 15u);
  EXPECT_EQ(f.degree(), 4);
}

TEST(Sampling, PrecisionBitsRoundCoefficients) {
  Form f = sample_bombieri({.n = 2, .d = 3, .seed = 9, .rational_precision_bits = 8}, 0);
  for (const auto& [e, c] : f.terms()) {
    mpz_class den = c.get_den();
    EXPECT_EQ(mpz_popcount(den.get_mpz_t()), 1u);
    EXPECT_LE(mpz_sizeinbase(c.get_num().get_mpz_t(), 2), 8u);
  }
}

TEST(Sampling, QuadraticBinaryFormsHaveTwoEigenvectors) {
  SampleSpec spec{.n = 2, .d = 2, .count = 200, .seed = 7};
  for (long i = 0; i < spec.count; ++i) EXPECT_EQ(real_eigen_count_binary(sample_bombieri(spec, i)).t(), 2);
}

TEST(Sampling, QuadraticTernaryFormsHaveThreeEigenvectors) {
  SampleSpec spec{.n = 3, .d = 2, .count = 20, .seed = 7};
  for (long i = 0; i < spec.count; ++i) EXPECT_EQ(real_eigen_count_ternary(sample_bombieri(spec, i)).t(), 3);
}

TEST(Wilson, KnownValues) {
  Interval ci = wilson_interval(50, 100);
  EXPECT_NEAR(ci.lo, 0.4038, 1e-4);
  EXPECT_NEAR(ci.hi, 0.5962, 1e-4);
  Interval zero = wilson_interval(0, 100);
  EXPECT_NEAR(zero.lo, 0.0, 1e-15);
  EXPECT_GT(zero.hi, 0.0);
}

TEST(Table, BinaryQuarticsSmallRun) {
  SampleSpec spec{.n = 2, .d = 4, .count = 400, .seed = 3};
  TableResult r = run_table(spec, Conditioner::RealRoots);
  EXPECT_EQ(r.accepted() + r.rejected, spec.count);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.column_total(0), 0);
  for (const auto& [q, row] : r.counts)
    for (const auto& [t, n] : row) {
      EXPECT_GE(t, std::max(q, 1));
      EXPECT_EQ(t % 2, 0);
    }
  EXPECT_DOUBLE_EQ(r.probability(4, 4), r.row_total(4) ? 1.0 : 0.0);
  double mean = r.mean_t();
  EXPECT_GT(mean, 2.0);
  EXPECT_LT(mean, 4.0);
}

TEST(Table, DeterministicAcrossThreadCounts) {
  SampleSpec spec{.n = 2, .d = 5, .count = 300, .seed = 11};
  TableResult a = run_table(spec, Conditioner::RealRoots, {.threads = 1});
  TableResult b = run_table(spec, Conditioner::RealRoots, {.threads = 3});
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Table, CubicsSmallRun) {
  SampleSpec spec{.n = 3, .d = 3, .count = 40, .seed = 5};
  TableResult r = run_table(spec, Conditioner::Ovals);
  EXPECT_EQ(r.accepted() + r.rejected, spec.count);
  EXPECT_EQ(r.violations, 0);
  for (const auto& [c, row] : r.counts) {
    EXPECT_LE(c, 1);
    for (const auto& [t, n] : row) {
      EXPECT_EQ(t % 2, 1);
      EXPECT_GE(t, 2 * c + 1);
      EXPECT_LE(t, 7);
    }
  }
}

TEST(Table, ConditionerMustMatchVariables) {
  EXPECT_THROW(run_table({.n = 3, .d = 3, .count = 1}, Conditioner::RealRoots), std::invalid_argument);
  EXPECT_THROW(run_table({.n = 2, .d = 3, .count = 1}, Conditioner::Ovals), std::invalid_argument);
}

TEST(Table, CsvAndJsonSchema) {
  TableResult r = run_table({.n = 2, .d = 3, .count = 50, .seed = 1}, Conditioner::RealRoots);
  std::istringstream csv(r.to_csv());
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "row_label,col_label,count,probability,ci_low,ci_high");
  std::string line;
  long total = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields[0] == "rejected") {
      EXPECT_EQ(std::stol(fields[2]), r.rejected);
      continue;
    }
    ASSERT_EQ(fields.size(), 6u) << line;
    if (fields[0].rfind("q=", 0) == 0) total += std::stol(fields[2]);
  }
  EXPECT_EQ(total, r.accepted());

  auto j = nlohmann::json::parse(r.to_json());
  ASSERT_TRUE(j.contains("rows"));
  long jtotal = 0;
  for (const auto& row : j["rows"]) {
    for (const char* key : {"row_label", "col_label", "count", "probability", "ci_low", "ci_high"})
      EXPECT_TRUE(row.contains(key)) << key;
    double p = row["probability"];
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_LE(row["ci_low"].get<double>(), p);
    EXPECT_GE(row["ci_high"].get<double>(), p);
    jtotal += row["count"].get<long>();
  }
  EXPECT_EQ(jtotal, r.accepted());
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_EQ(j["accepted"], r.accepted());
}

struct FourierCase {
  Rational s;
  int q;
  int t;
};

TEST(Fourier, ReferenceInstances) {
  for (const auto& c : {FourierCase{Q(-1, 2), 2, 4}, FourierCase{Q(-1, 3), 0, 4}, FourierCase{Q(2), 4, 4}}) {
    Form f = fourier_binary({.t = 4, .s = c.s, .parity = Parity::Even, .d = 4});
    EXPECT_EQ(f.num_vars(), 2);
    EXPECT_EQ(f.degree(), 4);
    EXPECT_EQ(count_projective_real_roots(f), c.q);
    EXPECT_EQ(real_eigen_count_binary(f).t(), c.t);
  }
}

TEST(Fourier, TrigonometricValues) {
  // Even construction agrees with its trigonometric definition on the circle.
  Rational s(3, 7);
  Form f = fourier_binary({.t = 6, .s = s, .parity = Parity::Even, .d = 6});
  for (double th : {0.1, 0.7, 1.9, 3.0, 4.4}) {
    std::array<double, 2> p{std::cos(th), std::sin(th)};
    double expected = 1 + std::cos(2 * th) / 2 + s.get_d() * (std::cos(6 * th) + std::sin(6 * th));
    EXPECT_NEAR(f.evaluate(std::span<const double>(p)), expected, 1e-12);
  }
}

TEST(Fourier, HitsEveryAdmissibleCount) {
  for (int d = 3; d <= 8; ++d)
    for (int t = d % 2 == 0 ? 2 : 1; t <= d; t += 2) {
      Parity parity = t % 2 == 0 ? Parity::Even : Parity::Odd;
      Form f = fourier_binary({.t = t, .s = Q(1), .parity = parity, .d = d});
      EXPECT_EQ(f.degree(), d);
      EXPECT_EQ(real_eigen_count_binary(f).t(), t) << "d=" << d << " t=" << t;
    }
}

TEST(Fourier, ParityViolation) {
  EXPECT_THROW(fourier_binary({.t = 3, .s = 1, .parity = Parity::Odd, .d = 4}), std::invalid_argument);
  EXPECT_THROW(fourier_binary({.t = 4, .s = 1, .parity = Parity::Odd, .d = 4}), std::invalid_argument);
  EXPECT_THROW(fourier_binary({.t = 6, .s = 1, .parity = Parity::Even, .d = 4}), std::invalid_argument);
}

TEST(Perturb, CubicLineArrangements) {
  ParseOptions z{.homogenize = 'z'};
  Form base = parse_form("x*y*(x+y+1)", z);
  Form f1 = perturb({base, parse_form("x^3+y^3-2", z), Q(1, 1000)});
  Form f2 = perturb({base, parse_form("-x^3-y^3+2", z), Q(1, 1000)});
  EXPECT_EQ(count_components(f1).ovals, 1);
  EXPECT_EQ(count_components(f2).ovals, 0);
  EXPECT_EQ(real_eigen_count_ternary(f1).t(), 7);
  EXPECT_EQ(real_eigen_count_ternary(f2).t(), 7);
}

TEST(Perturb, QuarticFourOvals) {
  ParseOptions z{.homogenize = 'z'};
  Form f = perturb({parse_form("x*y*(x+y+1/3)*(-3x+y+1)", z), parse_form("x^4+y^4-1", z), Q(1, 1000)});
  EXPECT_EQ(count_components(f).ovals, 4);
  EXPECT_EQ(real_eigen_count_ternary(f).t(), 13);
}

TEST(Perturb, DegreeMismatch) {
  EXPECT_THROW(perturb({X() * Y(), power(X(), 3), Q(1)}), std::invalid_argument);
}

TEST(Determinant, PencilMatchesExpansion) {
  RationalMatrix a{{Q(1), Q(2)}, {Q(2), Q(-1)}};
  RationalMatrix b{{Q(0), Q(1)}, {Q(1), Q(3)}};
  Form f = pencil_determinant(a, b, identity_matrix(2));
  Form e00 = X() + Z();
  Form e01 = C(2) * X() + Y();
  Form e11 = -X() + C(3) * Y() + Z();
  EXPECT_EQ(f, e00 * e11 - e01 * e01);
}

TEST(Determinant, HyperbolicQuarticIsNested) {
  SplitMix64 rng(stream_for(3, 0));
  Form f = random_hyperbolic(rng, 4);
  EXPECT_EQ(f.degree(), 4);
  CurveTopology topo = count_components(f);
  EXPECT_EQ(topo.ovals, 2);
  EXPECT_EQ(topo.max_depth(), 1);
}

TEST(Sextics, ClassicalBasesAreNonnegativeSamples) {
  for (const Form& f : {motzkin(), robinson(), choi_liu()}) {
    EXPECT_EQ(f.degree(), 6);
    SplitMix64 rng(1);
    for (int i = 0; i < 200; ++i) {
      std::array<double, 3> p{rng.normal(), rng.normal(), rng.normal()};
      EXPECT_GE(f.evaluate(std::span<const double>(p)), -1e-9);
    }
  }
}

TEST(Sextics, RandomSosIsPositive) {
  SplitMix64 rng(2);
  Form f = random_sos(rng, 3, 2);
  EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(count_components(f).ovals, 0);
}

TEST(Linear, ProductsOfRealLinearFormsAreMaximal) {
  SplitMix64 rng(4);
  for (int d = 3; d <= 6; ++d) {
    Form f = random_real_linear_product(rng, d);
    EXPECT_EQ(count_projective_real_roots(f), d);
    EXPECT_EQ(real_eigen_count_binary(f).t(), d);
  }
}

TEST(NumericOracle, AgreesOnFermatCubicAndRandomCubics) {
  Form fermat = power(X(), 3) + power(Y(), 3) + power(Z(), 3);
  EXPECT_EQ(numeric_eigenvectors(fermat, {.starts = 2000}).size(), 7u);
  SampleSpec spec{.n = 3, .d = 3, .count = 5, .seed = 17};
  for (long i = 0; i < spec.count; ++i) {
    Form f = sample_bombieri(spec, i);
    EXPECT_EQ(static_cast<int>(numeric_eigenvectors(f, {.starts = 3000}).size()),
              real_eigen_count_ternary(f).t());
  }
}

TEST(Pipeline, RejectsSingular) {
  Form f = X() * Y() * Z();
  SampleOutcome o = evaluate_sample(f, Conditioner::Ovals);
  EXPECT_TRUE(o.rejected);
  EXPECT_FALSE(o.reject_reason.empty());
}
