#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hqp/errors.hpp"
#include "hqp/quiver.hpp"

using namespace hqp;

namespace {

HQuiver make_quiver(const std::vector<int>& d, const std::vector<std::pair<int, int>>& arrows_1based) {
  HQuiver q;
  q.n = static_cast<int>(d.size());
  q.datum = MutationDatum::standard(d);
  for (auto [t, h] : arrows_1based) q.arrows.push_back({t - 1, h - 1});
  return q;
}

std::vector<std::pair<int, int>> sorted_arrows(const HQuiver& q) {
  std::vector<std::pair<int, int>> a;
  for (const auto& x : q.arrows) a.emplace_back(x.tail + 1, x.head + 1);
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST(MutateMatrix, RankThreeExample) {
  IntMat b{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  IntMat want{{0, -1, 2}, {1, 0, -1}, {-2, 1, 0}};
  EXPECT_EQ(mutate_matrix(b, {1, 2, 1}, 1), want);
}

TEST(MutateQuiver, PathThroughDegreeTwoVertex) {
  HQuiver q = make_quiver({1, 2, 1}, {{3, 2}, {2, 1}});
  HQuiver m = mutate_quiver(q, 1);
  std::vector<std::pair<int, int>> want{{1, 2}, {2, 3}, {3, 1}, {3, 1}};
  EXPECT_EQ(sorted_arrows(m), want);
  EXPECT_EQ(m.b_matrix(), mutate_matrix(q.b_matrix(), q.d(), 1));
}

TEST(MutateQuiver, ThreeCycleCancelsTwoCycle) {
  HQuiver q = make_quiver({1, 1, 1}, {{1, 2}, {2, 3}, {3, 1}});
  HQuiver m = mutate_quiver(q, 1);
  std::vector<std::pair<int, int>> want{{2, 1}, {3, 2}};
  EXPECT_EQ(sorted_arrows(m), want);
  EXPECT_EQ(m.count(0, 2) + m.count(2, 0), 0);
}

TEST(MutateQuiver, RejectsTwoCycleAtK) {
  HQuiver q = make_quiver({1, 1}, {{1, 2}, {2, 1}});
  EXPECT_THROW(mutate_quiver(q, 0), PreconditionError);
}

TEST(TwoAcyclic, Witness) {
  HQuiver q = make_quiver({1, 1}, {{2, 1}, {1, 2}});
  auto w = q.two_cycle();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(std::min(w->first, w->second), 0);
  EXPECT_EQ(std::max(w->first, w->second), 1);
  EXPECT_TRUE(make_quiver({1, 1, 1}, {{1, 2}, {2, 3}}).is_two_acyclic());
  EXPECT_TRUE(make_quiver({1, 1, 1}, {}).is_two_acyclic());
}

TEST(QuiverFromMatrix, Convention) {
  // b_ij counts arrows j -> i minus arrows i -> j
  HQuiver q = quiver_from_matrix({{0, 2}, {-2, 0}}, MutationDatum::standard({1, 1}));
  EXPECT_EQ(q.count(1, 0), 2);
  EXPECT_EQ(q.count(0, 1), 0);
}

TEST(QuiverProperty, ArrowMutationMatchesMatrixMutation) {
  std::mt19937_64 rng(2024);
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 5);
    HQuiver q = random_quiver(n, 3, 3, rng);
    for (int k = 0; k < n; ++k) {
      HQuiver m = mutate_quiver(q, k);
      ASSERT_EQ(m.b_matrix(), mutate_matrix(q.b_matrix(), q.d(), k)) << int_mat_str(q.b_matrix()) << " k=" << k;
      ASSERT_TRUE(m.is_two_acyclic());
    }
  }
}

TEST(QuiverProperty, SkewSymmetryAndInvolution) {
  std::mt19937_64 rng(7);
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 5);
    IntMat b = random_skew(n, 3, rng);
    std::vector<int> d(n);
    for (auto& x : d) x = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      IntMat m = mutate_matrix(b, d, k);
      ASSERT_TRUE(is_skew_symmetric(m));
      ASSERT_EQ(mutate_matrix(m, d, k), b);
    }
  }
}

TEST(MutationDatum, StandardIsReciprocal) {
  MutationDatum m = MutationDatum::standard({3, 2, 1});
  EXPECT_NO_THROW(m.validate());
  ASSERT_EQ(m.z[0].size(), 4u);
  EXPECT_EQ(m.z[0][1], m.z[0][2]);
  EXPECT_FALSE(m.z[0][0].symbolic);
  EXPECT_TRUE(m.z[1][1].symbolic);
  MutationDatum bad = m;
  bad.z[0][3].value = 2;
  EXPECT_THROW(bad.validate(), Error);
}
