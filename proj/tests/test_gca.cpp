#include <gtest/gtest.h>

#include "hqp/classical.hpp"
#include "hqp/errors.hpp"
#include "hqp/foracle.hpp"
#include "hqp/gca.hpp"
#include "hqp/library.hpp"
#include "hqp/rep.hpp"

using namespace hqp;

namespace {

const IntMat kRank2{{0, 1}, {-1, 0}};

Seed rank2_seed(SemifieldMode mode = SemifieldMode::TropZ) {
  return initial_seed(kRank2, MutationDatum::standard({2, 1}), mode);
}

RatFunc parse_in(const Seed& s, const std::string& num, const std::string& den) {
  return RatFunc(LaurentPoly::parse(s.ring, num), LaurentPoly::parse(s.ring, den));
}

std::vector<int> column(const IntMat& m, int l) {
  std::vector<int> c;
  for (const auto& row : m) c.push_back(row[l]);
  return c;
}

}  // namespace

TEST(MutateSeed, RankTwoExchange) {
  Seed s = rank2_seed();
  Seed t = mutate_seed(s, 0);
  EXPECT_EQ(t.x[0], parse_in(s, "x2^2 + z1*x2 + 1", "x1"));
  EXPECT_EQ(t.x[1], s.x[1]);
  EXPECT_EQ(t.B, mutate_matrix(kRank2, {2, 1}, 0));
  EXPECT_EQ(t.path, std::vector<int>{0});
}

TEST(MutateSeed, YInvertsAtK) {
  for (auto mode : {SemifieldMode::Principal, SemifieldMode::Universal}) {
    Seed s = rank2_seed(mode);
    for (int k = 0; k < 2; ++k) {
      Seed t = mutate_seed(s, k);
      EXPECT_EQ(t.y[k], s.y[k].inverse());
    }
  }
}

TEST(MutateSeed, ClassicalExchangeWithTrivialCoefficients) {
  Seed s = initial_seed({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, MutationDatum::standard({1, 1, 1}));
  Seed t = mutate_seed(s, 1);
  EXPECT_EQ(t.x[1], parse_in(s, "x1 + x3", "x2"));
}

TEST(MutateSeed, Involution) {
  for (auto mode : {SemifieldMode::TropZ, SemifieldMode::Principal}) {
    Seed s = bundled_rank3_seed();
    s = initial_seed(s.B, s.datum, mode);
    Seed t = mutate_along(s, {0, 2, 1});
    for (int k = 0; k < 3; ++k) {
      Seed back = mutate_seed(mutate_seed(t, k), k);
      EXPECT_TRUE(back.same_values(t)) << "k=" << k;
    }
  }
}

TEST(YHat, MutationRuleHolds) {
  Seed s = rank2_seed(SemifieldMode::Principal);
  for (int k = 0; k < 2; ++k) EXPECT_TRUE(yhat_mutation_check(s, k));
  Seed r3 = initial_seed(bundled_rank3_seed().B, bundled_rank3_seed().datum, SemifieldMode::Principal);
  Seed t = mutate_along(r3, {1, 0});
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(yhat_mutation_check(t, k));
}

TEST(FRecursion, FirstStepIsExchangePolynomial) {
  MutationDatum m = MutationDatum::standard({2, 1});
  auto recs = gf_recursion(kRank2, m, {0});
  VarsPtr v = yz_ring(2, m);
  EXPECT_EQ(recs.back().F[0], LaurentPoly::parse(v, "1 + z1*y1 + y1^2"));
  EXPECT_EQ(recs.back().F[1], LaurentPoly::constant(v, 1));
  // the same polynomial from the representation side
  QP qp = rank2_qp({2, 1});
  EXPECT_EQ(f_polynomial_oracle(qp, generalized_simple(qp.quiver, 0), v), recs.back().F[0]);
}

TEST(FRecursion, PrintedConventionLeavesPolynomials) {
  MutationDatum m = MutationDatum::standard({1, 1});
  VarsPtr v = yz_ring(2, m);
  // 1 + y1^-1 instead of 1 + y1 at the first step
  EXPECT_EQ(gf_recursion(kRank2, m, {0}, FSign::Printed).back().F[0], LaurentPoly::parse(v, "1 + y1^-1"));
  EXPECT_THROW(gf_recursion(kRank2, m, {1, 0, 1, 0}, FSign::Printed), NotApplicable);
}

TEST(Separation, RecoversMutatedVariable) {
  Seed s = rank2_seed();
  auto recs = gf_recursion(kRank2, s.datum, {0});
  RatFunc x = separation(s, column(recs.back().G, 0), recs.back().F[0]);
  EXPECT_EQ(x, mutate_seed(s, 0).x[0]);
}

TEST(Separation, AlongLongerPaths) {
  Seed s = bundled_rank3_seed();
  std::vector<int> path{0, 1, 2, 0};
  auto recs = gf_recursion(s.B, s.datum, path);
  Seed t = s;
  for (size_t i = 0; i < path.size(); ++i) {
    t = mutate_seed(t, path[i]);
    for (int l = 0; l < 3; ++l) EXPECT_EQ(separation(s, column(recs[i + 1].G, l), recs[i + 1].F[l]), t.x[l]);
  }
}

TEST(Classical, AgreesOnA3) {
  IntMat b{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  std::vector<int> path{0, 1, 2, 0, 1};
  auto recs = gf_recursion(b, MutationDatum::standard({1, 1, 1}), path);
  ClassicalState c = classical_initial(b);
  for (size_t i = 0; i < path.size(); ++i) {
    c = classical_mutate(c, path[i]);
    for (int l = 0; l < 3; ++l) {
      EXPECT_EQ(classical_g(c, b, l), column(recs[i + 1].G, l));
      EXPECT_EQ(classical_c(c, l), column(recs[i + 1].C, l));
      EXPECT_EQ(classical_f(c, l).str(), recs[i + 1].F[l].str());
    }
  }
}

TEST(Laurent, RankTwoDegreeTwo) {
  Seed s = initial_seed(kRank2, MutationDatum::standard({2, 2}));
  EXPECT_TRUE(laurent_check(s, {0, 1, 0, 1, 0, 1}).empty());
  EXPECT_TRUE(laurent_check(s, {}).empty());
}

TEST(Laurent, BundledRankThree) {
  EXPECT_TRUE(laurent_check(bundled_rank3_seed(), {0, 1, 2, 1}).empty());
}

TEST(Laurent, DetectsNonIntegralValues) {
  Seed s = rank2_seed();
  EXPECT_TRUE(is_laurent_integral(parse_in(s, "x2 + z1", "x1^2")));
  EXPECT_FALSE(is_laurent_integral(parse_in(s, "x2", "2*x1")));
  EXPECT_FALSE(is_laurent_integral(parse_in(s, "1", "x1 + x2")));
}

TEST(Laurent, PentagonPeriodicity) {
  Seed s = initial_seed(kRank2, MutationDatum::standard({1, 1}));
  Seed t = mutate_along(s, {0, 1, 0, 1, 0});
  EXPECT_TRUE(laurent_check(s, {0, 1, 0, 1, 0}).empty());
  // the fifth mutation returns the initial cluster with the two entries swapped
  EXPECT_EQ(t.x[0], s.x[1]);
  EXPECT_EQ(t.x[1], s.x[0]);
}

TEST(UpperBound, Membership) {
  Seed s = rank2_seed();
  EXPECT_FALSE(upper_membership(mutate_seed(s, 0).x[0], s).has_value());
  EXPECT_FALSE(upper_membership(s.x[0] * s.x[1], s).has_value());
  auto w = upper_membership(s.x[0].inverse(), s);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, 0);
}

TEST(ClusterCharacter, NegativeSimpleGivesInitialVariable) {
  QP qp = rank2_qp({2, 1});
  Seed s = initial_seed(qp.quiver.b_matrix(), qp.quiver.datum);
  VarsPtr v = yz_ring(2, qp.quiver.datum);
  for (int k = 0; k < 2; ++k) {
    std::vector<int> e(2, 0);
    e[k] = 1;
    EXPECT_EQ(cluster_character(s, e, LaurentPoly::constant(v, 1)), s.x[k]);
  }
}

TEST(ClusterCharacter, GeneralizedSimpleGivesMutatedVariable) {
  QP qp = rank2_qp({2, 1});
  Seed s = initial_seed(qp.quiver.b_matrix(), qp.quiver.datum);
  DecoratedRep m = generalized_simple(qp.quiver, 0);
  LaurentPoly f = f_polynomial_oracle(qp, m, yz_ring(2, qp.quiver.datum));
  EXPECT_EQ(cluster_character(s, weight_vectors(qp, m).gcheck, f), mutate_seed(s, 0).x[0]);
}

TEST(HRelation, RankTwoThreeSteps) {
  MutationDatum m = MutationDatum::standard({2, 1});
  for (int k = 0; k < 2; ++k) {
    HRelation h = h_relation_check(kRank2, m, {0, 1, 0}, k);
    EXPECT_TRUE(h.ok) << (h.failures.empty() ? "" : h.failures.front());
  }
}

TEST(FStructure, ConstantTermAndMaximalMonomial) {
  MutationDatum m = MutationDatum::standard({2, 2});
  auto recs = gf_recursion(kRank2, m, {0, 1, 0, 1});
  for (const auto& r : recs) {
    EXPECT_TRUE(sign_coherent_rows(r.G));
    EXPECT_EQ(std::abs(det_int(r.G)), 1);
    for (const auto& f : r.F) {
      EXPECT_TRUE(f_constant_term_one(f));
      EXPECT_TRUE(f_unique_max_monomial(f));
    }
  }
}

TEST(Explore, ClassicalA2Pentagon) {
  Seed s = initial_seed(kRank2, MutationDatum::standard({1, 1}));
  ExchangeGraph g = explore(s, 6, false);
  EXPECT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(g.edges.size(), 5u);
  EXPECT_FALSE(g.partial);
}

TEST(Explore, RankOne) {
  Seed s = initial_seed({{0}}, MutationDatum::standard({1}));
  EXPECT_EQ(explore(s, 4, false).nodes.size(), 2u);
  Seed t = initial_seed({{0}}, MutationDatum::standard({3}));
  EXPECT_EQ(explore(t, 4, false).nodes.size(), 2u);
}

TEST(Explore, AffineDegreeTwoIsReportedWithoutFinitenessClaim) {
  Seed s = initial_seed(kRank2, MutationDatum::standard({2, 2}));
  ExchangeGraph g = explore(s, 12, false);
  // one new cluster per step in each direction
  EXPECT_EQ(g.nodes.size(), 25u);
  EXPECT_FALSE(g.partial);
}
