#include <gtest/gtest.h>

#include "realeig/experiments.hpp"
#include "realeig/parser.hpp"

using namespace realeig;

class Gallery : public ::testing::TestWithParam<std::string> {};

TEST_P(Gallery, ReproducesOvalsAndEigenvectors) {
  const GalleryEntry& e = gallery_entry(GetParam());
  if (e.base_only) GTEST_SKIP() << "perturbation base";
  EigenReport r = real_eigen_count_ternary(e.form);
  if (e.singular) {
    EXPECT_FALSE(assert_smooth(e.form));
    if (!r.degenerate) EXPECT_EQ(r.t(), *e.expected_t);
    return;
  }
  ASSERT_FALSE(r.degenerate);
  EXPECT_EQ(r.t(), *e.expected_t);
  CurveTopology topo = count_components(e.form);
  EXPECT_EQ(topo.ovals, *e.expected_c);
  if (e.expected_nested) EXPECT_EQ(topo.nested(), *e.expected_nested);
  EXPECT_TRUE(harnack_check(e.form.degree(), topo));
  EXPECT_TRUE(verify_bounds(e.form, r, &topo).pass);
}

TEST_P(Gallery, ChartIndependence) {
  const GalleryEntry& e = gallery_entry(GetParam());
  if (e.base_only || e.singular) GTEST_SKIP();
  for (std::uint64_t seed : {11, 12, 13}) {
    EXPECT_EQ(real_eigen_count_ternary(e.form, {.seed = seed}).t(), *e.expected_t);
    CurveTopology topo = count_components(e.form, {.seed = seed});
    EXPECT_EQ(topo.ovals, *e.expected_c);
    EXPECT_EQ(topo.has_pseudoline, e.form.degree() % 2 == 1);
  }
}

namespace {
std::vector<std::string> names() {
  std::vector<std::string> n;
  for (const auto& e : gallery()) n.push_back(e.name);
  return n;
}
}  // namespace

INSTANTIATE_TEST_SUITE_P(Entries, Gallery, ::testing::ValuesIn(names()),
                         [](const auto& info) { return info.param; });

TEST(GalleryList, HasSextics) {
  int bases = 0;
  for (const auto& e : gallery()) bases += e.base_only;
  EXPECT_EQ(bases, 3);
  EXPECT_THROW(gallery_entry("nope"), std::out_of_range);
}

TEST(GalleryList, QuarticLinesF3RecoversThirteenForSmallerEpsilon) {
  ParseOptions po{.homogenize = 'z'};
  Form base = parse_form("x*y*(x+y+1/3)*(-3x+y+1)", po);
  Form g = parse_form("7x^4+6y^4-1-5x", po);
  for (int den : {2000, 10000}) {
    Form f = perturb({base, g, Rational(1, den)});
    EXPECT_EQ(real_eigen_count_ternary(f, {}).t(), 13);
    CurveTopology topo = count_components(f, {});
    EXPECT_EQ(topo.ovals, 2);
    EXPECT_FALSE(topo.nested());
  }
}
