#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "realeig/bipoly.hpp"
#include "realeig/form.hpp"
#include "realeig/unipoly.hpp"

using namespace realeig;
using namespace testing_helpers;

namespace {

Rational eval3(const Form& f, Rational a, Rational b, Rational c) {
  std::vector<Rational> p{a, b, c};
  return f.evaluate(p);
}

UniPoly random_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, 5));
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Q(1, 2));
  EXPECT_EQ(parse_rational("-1.25"), Q(-5, 4));
  EXPECT_EQ(parse_rational("1e-3"), Q(1, 1000));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, RoundToBits) {
  EXPECT_EQ(round_to_rational(0.5), Q(1, 2));
  EXPECT_EQ(round_to_rational(1.0 / 3.0, 4), Q(11, 32));
  EXPECT_EQ(to_double(round_to_rational(0.1)), 0.1);
}

TEST(Form, Evaluate) {
  Form fermat = power(X(), 3) + power(Y(), 3) + power(Z(), 3);
  EXPECT_EQ(eval3(fermat, 1, 1, 1), 3);

  Form cubic = Y() * Y() * Z() - power(X(), 3) - Q(1, 9) * X() * X() * Z() - X() * Z() * Z() - power(Z(), 3);
  EXPECT_EQ(eval3(cubic, 0, 1, 1), 0);

  Form circle = X() * X() + Y() * Y() - Z() * Z();
  EXPECT_EQ(eval3(circle, Q(3, 5), Q(4, 5), 1), 0);

  std::vector<Rational> bad{1, 2};
  EXPECT_THROW(fermat.evaluate(bad), std::invalid_argument);
}

TEST(Form, Partial) {
  EXPECT_EQ((power(X(2), 3) + power(Y(2), 3)).partial(0), Q(3) * X(2) * X(2));
  EXPECT_EQ((X() * Y() * (X() + Y() + Z())).partial(2), X() * Y());
  EXPECT_EQ((power(X(), 4) + power(Y(), 4) + power(Z(), 4)).partial(1), Q(4) * power(Y(), 3));
  Form c = C(5);
  EXPECT_TRUE(c.partial(0).is_zero());
  EXPECT_EQ(c.partial(0).degree(), 0);
  EXPECT_THROW(X().partial(3), std::invalid_argument);
}

TEST(Form, InvalidTermsRejected) {
  EXPECT_THROW(Form(2, 2, {{{1, 0, 0}, Q(1)}}), std::invalid_argument);
  EXPECT_THROW(Form(2, 1, {{{0, 0, 1}, Q(1)}}), std::invalid_argument);
  Form f(3, 1, {{{1, 0, 0}, Q(0)}});
  EXPECT_TRUE(f.is_zero());
}

TEST(Form, Dehomogenize) {
  Form x2y = X(2) * X(2) * Y(2);
  BinaryChart a = dehomogenize_binary(x2y, 1);
  EXPECT_EQ(a.poly, UniPoly({0, 0, 1}));
  EXPECT_EQ(a.drop, 1);  // y = 0 is a simple root at [1:0]
  BinaryChart b = dehomogenize_binary(x2y, 0);
  EXPECT_EQ(b.poly, UniPoly({0, 1}));
  EXPECT_EQ(b.drop, 2);

  Form f = power(X(2), 3) + power(Y(2), 3);
  Form g = Y(2) * f.partial(0) - X(2) * f.partial(1);
  EXPECT_EQ(g, Q(3) * X(2) * X(2) * Y(2) - Q(3) * X(2) * Y(2) * Y(2));
  BinaryChart c = dehomogenize_binary(g, 1);
  EXPECT_EQ(c.poly, UniPoly({0, -3, 3}));
  EXPECT_EQ(c.drop, 1);

  EXPECT_THROW(dehomogenize_binary(Form(2, 3), 1), std::domain_error);
}

TEST(Form, HomogenizeRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Form f = random_form(rng, 3, 1 + i % 5);
    TernaryChart ch = dehomogenize_ternary(f, 2);
    if (ch.drop != 0) continue;
    EXPECT_EQ(homogenize(ch.poly, f.degree(), 2), f);
    Form b = random_form(rng, 2, 1 + i % 6);
    BinaryChart bc = dehomogenize_binary(b, 1);
    if (bc.drop == 0) EXPECT_EQ(homogenize(bc.poly, b.degree(), 1), b);
  }
}

TEST(Form, EulerIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 2;
    int d = 1 + i % 6;
    Form f = random_form(rng, n, d);
    EXPECT_EQ(euler_operator(f), Rational(d) * f);
  }
}

TEST(Form, ExactArithmetic) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Form p = random_form(rng, 3, 4);
    Form q = random_form(rng, 3, 4);
    EXPECT_EQ((p + q) - q, p);
  }
}

TEST(Form, SubstituteIsFunctional) {
  std::mt19937_64 rng(17);
  Matrix3 t{{{Q(1), Q(2), Q(0)}, {Q(0), Q(1), Q(-1)}, {Q(3), Q(0), Q(1)}}};
  for (int i = 0; i < 20; ++i) {
    Form f = random_form(rng, 3, 3);
    Form g = f.substitute(t);
    std::array<Rational, 3> p{random_rational(rng), random_rational(rng), random_rational(rng)};
    auto tp = transform_point(t, p);
    EXPECT_EQ(eval3(g, p[0], p[1], p[2]), eval3(f, tp[0], tp[1], tp[2]));
    EXPECT_EQ(f.substitute(t).substitute(inverse(t)), f);
  }
}

TEST(UniPoly, Resultant) {
  EXPECT_EQ(resultant(UniPoly({-1, 0, 1}), UniPoly({-2, 1})), 3);
  EXPECT_EQ(resultant(UniPoly({1, 0, 1}), UniPoly({1, 0, 1})), 0);
  // Res(x - a, x - b) = a - b with p rows first.
  EXPECT_EQ(resultant(UniPoly::linear_root(5), UniPoly::linear_root(2)), 3);
  EXPECT_EQ(resultant(UniPoly::linear_root(2), UniPoly::linear_root(5)), -3);
  EXPECT_THROW(resultant(UniPoly(), UniPoly({1, 1})), std::domain_error);
}

TEST(UniPoly, ResultantProductOracle) {
  // Res(p, q) = lc(p)^deg q * prod q(r) over the roots r of p.
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> roots;
    UniPoly p = UniPoly::constant(random_rational(rng) + 100);
    for (int k = 0; k < 1 + i % 4; ++k) {
      roots.push_back(random_rational(rng));
      p *= UniPoly::linear_root(roots.back());
    }
    UniPoly q = random_poly(rng, 1 + i % 5);
    Rational expect = pow(p.leading(), q.degree());
    for (const auto& r : roots) expect *= q(r);
    EXPECT_EQ(resultant(p, q), expect);
  }
}

TEST(UniPoly, ResultantVanishesIffCommonFactor) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    UniPoly p = random_poly(rng, 1 + i % 6);
    UniPoly q = random_poly(rng, 1 + (i / 6) % 6);
    if (i % 3 == 0) {
      UniPoly common = random_poly(rng, 1);
      p *= common;
      q *= common;
    }
    bool common_factor = gcd(p, q).degree() > 0;
    EXPECT_EQ(resultant(p, q) == 0, common_factor);
  }
}

TEST(UniPoly, GcdAndSquarefree) {
  EXPECT_EQ(gcd(UniPoly({-1, 0, 1}), UniPoly({1, 2, 1})), UniPoly({1, 1}));
  UniPoly p = UniPoly::linear_root(1) * UniPoly::linear_root(1) * UniPoly::linear_root(-2);
  EXPECT_EQ(squarefree_part(p), UniPoly::linear_root(1) * UniPoly::linear_root(-2));
  EXPECT_EQ(squarefree_part(UniPoly({0, 0, 0, 1})), UniPoly({0, 1}));
  EXPECT_THROW(gcd(UniPoly(), UniPoly()), std::domain_error);
  EXPECT_EQ(gcd(UniPoly(), UniPoly({2, 4})), UniPoly({Q(1, 2), 1}));
}

TEST(UniPoly, Yun) {
  UniPoly a = UniPoly::linear_root(1);
  UniPoly b = UniPoly::linear_root(2);
  UniPoly c = UniPoly({1, 0, 1});
  auto f = squarefree_factorization(Q(3) * a * b * b * c * c * c);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], a);
  EXPECT_EQ(f[1], b);
  EXPECT_EQ(f[2], c);
}

TEST(UniPoly, DivMod) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    UniPoly a = random_poly(rng, i % 8);
    UniPoly b = random_poly(rng, 1 + i % 3);
    DivMod qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree());
  }
  EXPECT_THROW(divmod(UniPoly({1}), UniPoly()), std::domain_error);
}

TEST(BiPoly, ResultantMatchesSpecialization) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Form f = random_form(rng, 3, 2 + i % 3);
    Form g = random_form(rng, 3, 2 + (i / 3) % 3);
    BiPoly p = dehomogenize_ternary(f, 2).poly;
    BiPoly q = dehomogenize_ternary(g, 2).poly;
    UniPoly r = resultant_wrt(p, q, 1);
    for (int x = -2; x <= 2; ++x) {
      UniPoly px = p.specialize(0, x);
      UniPoly qx = q.specialize(0, x);
      if (px.degree() != p.degree_in(1) || qx.degree() != q.degree_in(1)) continue;
      EXPECT_EQ(r(x), resultant(px, qx));
    }
  }
}

TEST(BiPoly, FirstSubresultantIsLinearInY) {
  // For p, q sharing exactly one simple root y0 at a given x, S1 = c1*y + c0 with -c0/c1 = y0.
  BiPoly y(std::map<BiPoly::Key, Rational>{{{0, 1}, Q(1)}});
  BiPoly x(std::map<BiPoly::Key, Rational>{{{1, 0}, Q(1)}});
  BiPoly one(std::map<BiPoly::Key, Rational>{{{0, 0}, Q(1)}});
  BiPoly p = (y - x) * (y + one);
  BiPoly q = (y - x) * (y - one - one);
  auto s1 = subresultant_wrt(p, q, 1, 1);
  ASSERT_EQ(s1.size(), 2u);
  for (int xv = 3; xv < 6; ++xv) {
    Rational c0 = s1[0](xv);
    Rational c1 = s1[1](xv);
    ASSERT_NE(c1, 0);
    EXPECT_EQ(-c0 / c1, xv);
  }
  EXPECT_THROW(subresultant_wrt(p, q, 1, 2), std::invalid_argument);
}
