#include <gtest/gtest.h>

#include "helpers.hpp"
#include "realeig/errors.hpp"
#include "realeig/experiments.hpp"
#include "realeig/topology.hpp"

using namespace realeig;
using namespace testing_helpers;

namespace {

Form cubic_with_oval() {
  return Y() * Y() * Z() - Q(2, 100) * power(X(), 3) + Q(45, 100) * X() * X() * Z() + Q(303, 100) * X() * Z() * Z() +
         Q(29, 100) * power(Z(), 3);
}

Form circle(const Rational& cx, const Rational& cy, const Rational& r) {
  Form dx = X() - cx * Z();
  Form dy = Y() - cy * Z();
  return dx * dx + dy * dy - r * r * Z() * Z();
}

}  // namespace

TEST(Smooth, Examples) {
  EXPECT_TRUE(assert_smooth(X() * X() + Y() * Y() - Z() * Z()));
  EXPECT_FALSE(assert_smooth(X() * Y() * (X() + Y() + Z())));
  EXPECT_TRUE(assert_smooth(power(X(), 4) + power(Y(), 4) + power(Z(), 4)));
  EXPECT_TRUE(assert_smooth(X() + Y()));
  EXPECT_FALSE(assert_smooth(X() * X()));  // double line
}

TEST(Topology, Conic) {
  CurveTopology t = count_components(X() * X() + Y() * Y() - Z() * Z());
  EXPECT_EQ(t.components, 1);
  EXPECT_EQ(t.ovals, 1);
  EXPECT_FALSE(t.has_pseudoline);
  EXPECT_TRUE(t.smooth_certified);
}

TEST(Topology, Line) {
  CurveTopology t = count_components(X() + Q(2) * Y() - Z());
  EXPECT_EQ(t.components, 1);
  EXPECT_EQ(t.ovals, 0);
  EXPECT_TRUE(t.has_pseudoline);
}

TEST(Topology, CubicWithOval) {
  CurveTopology t = count_components(cubic_with_oval());
  EXPECT_EQ(t.components, 2);
  EXPECT_EQ(t.ovals, 1);
  EXPECT_TRUE(t.has_pseudoline);
}

TEST(Topology, EmptyFermatQuartic) {
  CurveTopology t = count_components(power(X(), 4) + power(Y(), 4) + power(Z(), 4));
  EXPECT_EQ(t.components, 0);
  EXPECT_EQ(t.ovals, 0);
}

TEST(Topology, SingularRejected) {
  EXPECT_THROW(count_components(X() * Y() * (X() + Y() + Z())), InputError);
}

TEST(Topology, NestedCirclesPerturbed) {
  // Two concentric circles, slightly perturbed to stay generic.
  Form f = circle(0, 0, 1) * circle(Q(1, 10), 0, 3) + Q(1, 1000) * power(Z(), 4);
  CurveTopology t = count_components(f);
  ASSERT_EQ(t.ovals, 2);
  EXPECT_TRUE(t.nested());
  EXPECT_EQ(t.max_depth(), 1);
}

TEST(Topology, SeparateCircles) {
  Form f = circle(0, 0, 1) * circle(5, 1, 2) - Q(1, 1000) * power(Z(), 4);
  CurveTopology t = count_components(f);
  EXPECT_EQ(t.ovals, 2);
  EXPECT_FALSE(t.nested());
}

TEST(Topology, ChartIndependence) {
  Form f = circle(0, 0, 1) * circle(Q(1, 10), 0, 3) + Q(1, 1000) * power(Z(), 4);
  for (std::uint64_t seed : {1, 2, 3}) {
    CurveTopology t = count_components(f, {.seed = seed});
    EXPECT_EQ(t.ovals, 2);
    EXPECT_TRUE(t.nested());
  }
}

TEST(Harnack, Bounds) {
  EXPECT_TRUE(harnack_check(4, 4));
  EXPECT_FALSE(harnack_check(4, 5));
  EXPECT_FALSE(harnack_check(3, 0));
  EXPECT_TRUE(harnack_check(3, 2));
  EXPECT_TRUE(harnack_check(4, 0));
}

TEST(Topology, RandomCurvesParityHarnackAndCharts) {
  for (int d = 3; d <= 5; ++d) {
    SampleSpec spec{.n = 3, .d = d, .count = d == 5 ? 4 : 12, .seed = 100 + static_cast<std::uint64_t>(d)};
    for (long i = 0; i < spec.count; ++i) {
      Form f = sample_bombieri(spec, i);
      CurveTopology a = count_components(f, {.seed = 1});
      CurveTopology b = count_components(f, {.seed = 2, .check_smooth = false});
      EXPECT_EQ(a.has_pseudoline, d % 2 == 1);
      EXPECT_EQ(a.components, a.ovals + (a.has_pseudoline ? 1 : 0));
      EXPECT_TRUE(harnack_check(d, a));
      EXPECT_EQ(a.ovals, b.ovals);
      EXPECT_EQ(a.max_depth(), b.max_depth());
    }
  }
}
