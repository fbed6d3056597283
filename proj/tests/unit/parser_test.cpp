#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "realeig/parser.hpp"

using namespace realeig;
using namespace testing_helpers;

namespace {
const ParseOptions kZ{.homogenize = 'z'};
}

TEST(Parser, HomogenizesLineProduct) {
  EXPECT_EQ(parse_form("x*y*(x+y+1)", kZ), X() * Y() * (X() + Y() + Z()));
}

TEST(Parser, HomogenizesFermat) {
  EXPECT_EQ(parse_form("x^4+y^4+1", kZ), power(X(), 4) + power(Y(), 4) + power(Z(), 4));
}

TEST(Parser, RejectsInhomogeneous) {
  EXPECT_THROW(parse_form("x^2+y"), ParseError);
}

TEST(Parser, HomogeneousTernaryWithoutFlag) {
  Form f = parse_form("x^3+y^3+z^3");
  EXPECT_EQ(f.num_vars(), 3);
  EXPECT_EQ(f, power(X(), 3) + power(Y(), 3) + power(Z(), 3));
}

TEST(Parser, BinaryByDefault) {
  Form f = parse_form("x^2-y^2");
  EXPECT_EQ(f.num_vars(), 2);
  EXPECT_EQ(f, X(2) * X(2) - Y(2) * Y(2));
}

TEST(Parser, ImplicitProductsAndLiterals) {
  Form f = parse_form("2xy(x+y/3) - 0.5x^2y", {});
  Form g = C(2, 2) * X(2) * Y(2) * (X(2) + C(Q(1, 3), 2) * Y(2)) - C(Q(1, 2), 2) * X(2) * X(2) * Y(2);
  EXPECT_EQ(f, g);
}

TEST(Parser, FractionLiteralAndUnaryMinus) {
  EXPECT_EQ(parse_form("-(1/9)*x^2*z+y^2*z"), C(Q(-1, 9)) * X() * X() * Z() + Y() * Y() * Z());
}

TEST(Parser, ErrorOffsets) {
  try {
    parse_form("x^2 + * y^2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  try {
    parse_form("x^2 + y^2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
  }
  EXPECT_THROW(parse_form("x/y"), ParseError);
  EXPECT_THROW(parse_form("x^(1/2)"), ParseError);
  EXPECT_THROW(parse_form("x^2 + w^2"), ParseError);
  EXPECT_THROW(parse_form(""), ParseError);
}

TEST(Parser, HomogenizingVariableAlreadyPresent) {
  EXPECT_THROW(parse_form("x^2+z^2", kZ), ParseError);
}

TEST(Parser, RoundTripRandomForms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + i % 2;
    int d = 1 + i % 6;
    Form f = random_form(rng, n, d);
    std::string text = print_form(f);
    Form g = parse_form(text, {.num_vars = n});
    ASSERT_EQ(f, g) << text;
  }
}
