// Acceptance suite: prints one PASS/FAIL line per criterion.
// Usage: realeig_acceptance [criterion...]   (default: all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "realeig/eigen.hpp"
#include "realeig/errors.hpp"
#include "realeig/experiments.hpp"
#include "realeig/topology.hpp"

using namespace realeig;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

void count_formula(Outcome& o) {
  struct Case {
    int n, d;
    long long want;
  };
  for (Case c : {Case{3, 3, 7}, Case{3, 4, 13}, Case{3, 5, 21}, Case{2, 3, 3}, Case{2, 4, 4}, Case{2, 7, 7},
                 Case{2, 2, 2}, Case{3, 2, 3}, Case{4, 2, 4}}) {
    long long got = expected_complex_count(c.n, c.d);
    o.check(got == c.want, "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ") gave " + std::to_string(got));
  }
  o.detail << "9 cases";
}

void gallery_regression(Outcome& o) {
  int checked = 0;
  for (const auto& e : gallery()) {
    if (e.base_only) continue;
    ++checked;
    EigenReport r = real_eigen_count_ternary(e.form);
    if (e.singular) {
      o.check(!assert_smooth(e.form), e.name + " should be singular");
      if (!r.degenerate) o.check(r.t() == *e.expected_t, e.name + " t=" + std::to_string(r.t()));
      continue;
    }
    if (r.degenerate) {
      o.check(false, e.name + " degenerate");
      continue;
    }
    CurveTopology topo = count_components(e.form);
    std::string got = "(c=" + std::to_string(topo.ovals) + ",t=" + std::to_string(r.t()) + ")";
    std::string want = "(c=" + std::to_string(*e.expected_c) + ",t=" + std::to_string(*e.expected_t) + ")";
    o.check(topo.ovals == *e.expected_c && r.t() == *e.expected_t, e.name + " " + got + " want " + want);
    if (e.expected_nested) o.check(topo.nested() == *e.expected_nested, e.name + " nesting");
  }
  o.detail << checked << " entries";
}

void binary_property(Outcome& o) {
  for (int d : {4, 5}) {
    SampleSpec spec{.n = 2, .d = d, .count = 10000, .seed = 3};
    long violations = 0, rejected = 0;
    for (long i = 0; i < spec.count; ++i) {
      SampleOutcome s = evaluate_sample(sample_bombieri(spec, i), Conditioner::RealRoots);
      if (s.rejected) ++rejected;
      else if (!s.verdict.pass) ++violations;
    }
    o.check(violations == 0, "d=" + std::to_string(d) + " violations=" + std::to_string(violations));
    o.detail << "d=" << d << ": 10000 samples, " << violations << " violations, " << rejected << " rejected; ";
  }
}

void cubic_property(Outcome& o) {
  SampleSpec spec{.n = 3, .d = 3, .count = 2000, .seed = 4};
  long violations = 0, rejected = 0, regular = 0, euler_bad = 0;
  for (long i = 0; i < spec.count; ++i) {
    SampleOutcome s = evaluate_sample(sample_bombieri(spec, i), Conditioner::Ovals, {.morse = true});
    if (s.rejected) {
      ++rejected;
      continue;
    }
    if (!s.verdict.pass) ++violations;
    if (s.morse && s.morse->morse_regular()) {
      ++regular;
      if (s.morse->euler() != 2) ++euler_bad;
    }
  }
  o.check(violations == 0, "bound violations=" + std::to_string(violations));
  o.check(euler_bad == 0, "C0-C1+C2 != 2 on " + std::to_string(euler_bad));
  o.detail << "2000 cubics, " << rejected << " rejected, " << regular << " Morse-regular, " << violations
           << " violations";
}

void binary_tables(Outcome& o) {
  TableResult t4 = run_table({.n = 2, .d = 4, .count = 100000, .seed = 5}, Conditioner::RealRoots);
  TableResult t5 = run_table({.n = 2, .d = 5, .count = 100000, .seed = 5}, Conditioner::RealRoots);
  double p0 = t4.marginal(0);
  double p22 = t4.probability(2, 2);
  double e4 = t4.mean_t();
  double p11 = t5.probability(1, 1);
  double e5 = t5.mean_t();
  o.check(p0 == 0.0, "d=4 P(t=0)");
  o.check(within(p22, 0.516, 0.01), "d=4 P(t=2|q=2)");
  o.check(within(e4, 3.162, 0.02), "d=4 E(t)");
  o.check(within(p11, 0.0516, 0.005), "d=5 P(t=1|q=1)");
  o.check(within(e5, 3.597, 0.02), "d=5 E(t)");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "d=4: P(t=0)=%g P(t=2|q=2)=%.4f E=%.4f; d=5: P(t=1|q=1)=%.4f E=%.4f; rejected %ld/%ld", p0, p22, e4,
                p11, e5, t4.rejected, t5.rejected);
  o.detail << buf;
}

void cubic_table(Outcome& o) {
  TableResult t = run_table({.n = 3, .d = 3, .count = 10000, .seed = 6}, Conditioner::Ovals);
  double p11 = t.probability(1, 1);
  double p51 = t.probability(1, 5);
  double e = t.mean_t();
  o.check(p11 == 0.0, "P(t=1|c=1)");
  o.check(within(p51, 0.51, 0.04), "P(t=5|c=1)");
  o.check(within(e, 5.28, 0.15), "E(t)");
  char buf[200];
  std::snprintf(buf, sizeof buf, "P(t=1|c=1)=%g P(t=5|c=1)=%.4f E=%.4f; rejected %ld", p11, p51, e, t.rejected);
  o.detail << buf;
}

void fourier(Outcome& o) {
  struct Case {
    Rational s;
    int q, t;
  };
  for (const Case& c : {Case{Rational(-1, 2), 2, 4}, Case{Rational(-1, 3), 0, 4}, Case{Rational(2), 4, 4}}) {
    Form f = fourier_binary({.t = 4, .s = c.s, .parity = Parity::Even, .d = 4});
    SampleOutcome s = evaluate_sample(f, Conditioner::RealRoots);
    o.check(!s.rejected && s.row == c.q && s.t == c.t, "s=" + c.s.get_str() + " gave (" + std::to_string(s.row) +
                                                           "," + std::to_string(s.t) + ")");
    o.detail << "s=" << c.s.get_str() << " (" << s.row << "," << s.t << ") ";
  }
}

void linear_products(Outcome& o) {
  int bad = 0;
  for (int d = 3; d <= 6; ++d)
    for (std::uint64_t i = 0; i < 100; ++i) {
      SplitMix64 rng = stream_for(8, i * 16 + d);
      Form f = random_real_linear_product(rng, d);
      int t = real_eigen_count_binary(f).t();
      if (t != d) {
        ++bad;
        o.check(false, "d=" + std::to_string(d) + " sample " + std::to_string(i) + " t=" + std::to_string(t));
      }
    }
  o.detail << "400 products, " << bad << " mismatches";
}

void sextics(Outcome& o) {
  int tmin = 1000, tmax = 0, ok = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 rng = stream_for(9, i);
    Form f = random_hyperbolic(rng, 6);
    EigenReport r = real_eigen_count_ternary(f);
    CurveTopology topo = count_components(f);
    int t = r.t();
    bool good = !r.degenerate && topo.ovals == 3 && topo.max_depth() == 2 && t % 2 == 1 && t >= 7 && t <= 31;
    o.check(good, "hyperbolic " + std::to_string(i) + " c=" + std::to_string(topo.ovals) + " t=" + std::to_string(t));
    ok += good;
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  o.detail << "hyperbolic " << ok << "/100, t in [" << tmin << "," << tmax << "]; ";
  ok = 0;
  tmin = 1000;
  for (std::uint64_t i = 0; i < 50; ++i) {
    SplitMix64 rng = stream_for(10, i);
    Form f = perturbed_sextic(motzkin(), rng);
    EigenReport r = real_eigen_count_ternary(f);
    CurveTopology topo = count_components(f);
    bool good = !r.degenerate && topo.ovals == 0 && r.t() >= 3;
    o.check(good, "motzkin " + std::to_string(i) + " c=" + std::to_string(topo.ovals) + " t=" + std::to_string(r.t()));
    ok += good;
    tmin = std::min(tmin, r.t());
  }
  o.detail << "perturbed Motzkin " << ok << "/50, min t " << tmin;
}

void oracle(Outcome& o) {
  SampleSpec spec{.n = 3, .d = 3, .count = 50, .seed = 11};
  int agree = 0;
  for (long i = 0; i < spec.count; ++i) {
    Form f = sample_bombieri(spec, i);
    int exact = real_eigen_count_ternary(f).t();
    int numeric = static_cast<int>(numeric_eigenvectors(f, {.starts = 10000, .seed = static_cast<std::uint64_t>(i)}).size());
    o.check(exact == numeric,
            "sample " + std::to_string(i) + " exact " + std::to_string(exact) + " numeric " + std::to_string(numeric));
    agree += exact == numeric;
  }
  o.detail << agree << "/50 agree";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {"count formula", count_formula},
      {"gallery regression", gallery_regression},
      {"binary bounds on Bombieri forms", binary_property},
      {"cubic bounds and Morse counts", cubic_property},
      {"binary tables d=4, d=5", binary_tables},
      {"ternary cubic table", cubic_table},
      {"Fourier constructions", fourier},
      {"products of real linear forms", linear_products},
      {"sextic substitutes", sextics},
      {"numeric oracle equivalence", oracle},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) which.push_back(i);
  bool all = true;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "no criterion %d\n", k);
      return 2;
    }
    const Criterion& c = criteria()[k - 1];
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", k, c.name, o.detail.str().c_str(), secs);
    const std::size_t shown = std::min<std::size_t>(o.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) std::printf("     %s\n", o.failures[i].c_str());
    if (o.failures.size() > shown) std::printf("     ... %zu more\n", o.failures.size() - shown);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
