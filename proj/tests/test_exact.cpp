#include <random>

#include <gtest/gtest.h>

#include "hqp/errors.hpp"
#include "hqp/linalg.hpp"
#include "hqp/poly.hpp"
#include "hqp/rational.hpp"
#include "hqp/semifield.hpp"

using namespace hqp;

namespace {

VarsPtr xyz() { return Vars::make({"x", "y", "z"}); }

LaurentPoly random_poly(const VarsPtr& v, std::mt19937_64& rng, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi), c(-3, 3);
  LaurentPoly p(v);
  for (int t = 0; t < terms; ++t) {
    Exp x(v->size());
    for (auto& a : x) a = e(rng);
    p += LaurentPoly::monomial(v, x, c(rng));
  }
  return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_TRUE(is_integer(parse_rational("8/4")));
}

TEST(LaurentPoly, Arithmetic) {
  auto v = xyz();
  auto x = LaurentPoly::variable(v, "x"), y = LaurentPoly::variable(v, "y");
  auto one = LaurentPoly::constant(v, 1);
  LaurentPoly p = (x + one) * (x - one);
  EXPECT_EQ(p, x * x - one);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x + y).pow(2), x * x + x * y.scaled(2) + y * y);
  EXPECT_EQ(divexact(p, x + one), x - one);
  EXPECT_FALSE(try_divexact(x, x + one).has_value());
  EXPECT_EQ(LaurentPoly::variable(v, 0, -2) * x * x, one);
}

TEST(LaurentPoly, ParseRoundTrip) {
  auto v = xyz();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(v, rng, 5, -2, 3);
    EXPECT_EQ(LaurentPoly::parse(v, p.str()), p) << p.str();
    EXPECT_EQ(LaurentPoly::parse(v, p.str()).str(), p.str());
  }
}

TEST(LaurentPoly, ProductDividesBack) {
  auto v = xyz();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = random_poly(v, rng, 4, -1, 3), b = random_poly(v, rng, 3, 0, 2);
    if (b.is_zero()) continue;
    EXPECT_EQ(divexact(a * b, b), a);
  }
}

TEST(RatFunc, NormalizesMonomialDenominators) {
  auto v = xyz();
  auto x = LaurentPoly::variable(v, "x"), y = LaurentPoly::variable(v, "y");
  auto one = LaurentPoly::constant(v, 1);
  RatFunc f(y + one, x);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.num(), (y + one) * LaurentPoly::variable(v, "x", -1));
  RatFunc g(x * x - one, x - one);
  EXPECT_TRUE(g.is_laurent());
  EXPECT_EQ(g.num(), x + one);
  RatFunc h(one, x + y);
  EXPECT_FALSE(h.is_laurent());
  EXPECT_EQ(h * RatFunc(x + y), RatFunc::constant(v, 1));
  EXPECT_EQ(RatFunc(x + y).inverse(), h);
}

TEST(RatFunc, FieldAxiomsOnRandomValues) {
  auto v = xyz();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    RatFunc a(random_poly(v, rng, 3, 0, 2), random_poly(v, rng, 2, 0, 1) + LaurentPoly::constant(v, 5));
    RatFunc b(random_poly(v, rng, 2, 0, 2) + LaurentPoly::constant(v, 7));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(Semifield, Tropical) {
  auto g = Vars::make({"z1", "z2"});
  auto a = TropicalValue::generator(g, 0), b = TropicalValue::generator(g, 1);
  auto one = TropicalValue::one(g);
  EXPECT_EQ(trop_add(a, one), one);
  EXPECT_EQ(trop_add(trop_pow(a, -1), one), trop_pow(a, -1));
  EXPECT_EQ(trop_mul(a, trop_div(b, a)), b);
  // 1 + z + 1 is 1 in Trop(z)
  EXPECT_EQ(trop_add(trop_add(one, a), one), one);
}

TEST(Semifield, ExpressionsEvaluateInEachSemifield) {
  auto e = parse_sf_expr("(y1 + 1)^2 / y1");
  std::map<std::string, Q> env{{"y1", Q(2)}};
  EXPECT_EQ(sf_eval(*e, env, RationalSemifield{}), Q(9, 2));
  auto g = Vars::make({"y1"});
  std::map<std::string, TropicalValue> tenv{{"y1", trop_pow(TropicalValue::generator(g, 0), 3)}};
  EXPECT_EQ(sf_eval(*e, tenv, TropicalSemifield{g}).e, std::vector<int>{-3});
  std::map<std::string, SubtractionFreeValue> uenv{{"y1", SubtractionFreeValue::variable(g, 0)}};
  auto u = sf_eval(*e, uenv, UniversalSemifield{g});
  auto y = LaurentPoly::variable(g, 0);
  auto one = LaurentPoly::constant(g, 1);
  EXPECT_EQ(u.value(), RatFunc((y + one) * (y + one), y));
}

TEST(Linalg, RankNullspaceDet) {
  Mat a(3, 3);
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
  EXPECT_EQ(rank(a), 2);
  EXPECT_EQ(det(a), 0);
  Mat n = nullspace(a);
  ASSERT_EQ(n.cols(), 1);
  EXPECT_TRUE((a * n).is_zero());
  EXPECT_FALSE(inverse(a).has_value());
  a(2, 2) = 10;
  EXPECT_EQ(det(a), -3);
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Mat::identity(3));
}

TEST(Linalg, RandomSolve) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Mat a(4, 5), x(5, 1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = c(rng);
    for (int j = 0; j < 5; ++j) x(j, 0) = c(rng);
    Mat b = a * x;
    auto s = solve(a, b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(a * *s, b);
    EXPECT_EQ(rank(a) + nullspace(a).cols(), 5);
  }
}

TEST(Linalg, JordanType) {
  // one block of size 3 and one of size 1
  Mat e(4, 4);
  e(1, 0) = 1;
  e(2, 1) = 1;
  auto t = nilpotent_jordan_type(e);
  ASSERT_GE(t.size(), 4u);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t[3], 1);
  EXPECT_EQ(t[2], 0);
}
