#include <gtest/gtest.h>

#include "hqp/errors.hpp"
#include "hqp/jacobian.hpp"
#include "hqp/library.hpp"
#include "hqp/pathalg.hpp"

using namespace hqp;

namespace {

QP path_qp(const std::vector<int>& d) {
  QP qp;
  qp.quiver.n = 3;
  qp.quiver.datum = MutationDatum::standard(d);
  qp.quiver.arrows = {{0, 1}, {1, 2}};
  return qp;
}

CyclicWord rotate(const CyclicWord& w, size_t r) {
  CyclicWord o;
  for (size_t i = 0; i < w.size(); ++i) o.push_back(w[(i + r) % w.size()]);
  return o;
}

}  // namespace

TEST(CyclicWord, CanonicalRotationIsUnique) {
  QP qp = three_cycle_qp({2, 2, 2});
  for (const auto& w : cyclic_words(qp.quiver, 6)) {
    EXPECT_EQ(canonical(w), w);
    for (size_t r = 1; r < w.size(); ++r) EXPECT_EQ(canonical(rotate(w, r)), w);
  }
}

TEST(Potential, NoDuplicatesAfterAddingRotations) {
  QP qp = three_cycle_qp({1, 1, 1});
  Potential s;
  CyclicWord w{{0, 2}, {0, 1}, {0, 0}};
  s.add(w, 1);
  s.add(rotate(w, 1), 2);
  ASSERT_EQ(s.terms.size(), 1u);
  EXPECT_EQ(s.terms.begin()->second, 3);
  s.add(rotate(w, 2), -3);
  EXPECT_TRUE(s.is_zero());
}

TEST(CyclicDerivative, ThreeCycle) {
  QP qp = three_cycle_qp({1, 1, 1});
  // d_a(cba) = cb, a path 2 -> 1
  Path cb{0, 1, {2, 1}, {0, 0, 0}};
  EXPECT_EQ(cyclic_derivative(qp, 0), element_of(cb));
}

TEST(CyclicDerivative, AbsentArrowGivesZero) {
  QP qp = three_cycle_qp({1, 1, 1});
  qp.quiver.arrows.push_back({0, 2});
  EXPECT_TRUE(cyclic_derivative(qp, 3).empty());
}

TEST(CyclicDerivative, InvariantUnderRotation) {
  QP qp = three_cycle_qp({2, 1, 2});
  Potential s = random_potential(qp.quiver, 6, 3, 17);
  for (int a = 0; a < 3; ++a) {
    QP r = qp;
    r.potential = Potential{};
    for (const auto& [w, c] : s.terms) r.potential.add(rotate(w, 1), c);
    QP o = qp;
    o.potential = s;
    EXPECT_EQ(cyclic_derivative(o, a), cyclic_derivative(r, a));
  }
}

TEST(EpsDerivative, NoLoopsAtKGivesZero) {
  QP qp = three_cycle_qp({1, 2, 1});
  EXPECT_TRUE(eps_derivative(qp, 1).empty());
  QP p = three_cycle_qp({1, 1, 1});
  EXPECT_TRUE(eps_derivative(p, 0).empty());
}

TEST(Premutation, ThreeCycle) {
  QP qp = three_cycle_qp({1, 1, 1});
  Premutation pre = premutate(qp, 1);
  EXPECT_EQ(pre.qp.quiver.arrows.size(), 4u);
  ASSERT_EQ(pre.composites.size(), 1u);
  int ba = pre.first_composite;
  EXPECT_EQ(pre.qp.quiver.arrows[ba].tail, 0);
  EXPECT_EQ(pre.qp.quiver.arrows[ba].head, 2);
  // c[ba] + [ba]a*b*
  EXPECT_EQ(pre.qp.potential.terms.size(), 2u);
  for (const auto& [w, c] : pre.qp.potential.terms) {
    EXPECT_EQ(c, 1);
    bool has_ba = false;
    for (auto [l, a] : w) has_ba |= a == ba;
    EXPECT_TRUE(has_ba);
  }
}

TEST(Premutation, ZeroPotentialGivesDeltaOnly) {
  QP qp = path_qp({1, 1, 1});
  Premutation pre = premutate(qp, 1);
  ASSERT_EQ(pre.composites.size(), 1u);
  ASSERT_EQ(pre.qp.potential.terms.size(), 1u);
  EXPECT_EQ(word_length(pre.qp.potential.terms.begin()->first), 3);
}

TEST(Premutation, DegreeTwoHasTwoCompositeArrows) {
  QP qp = path_qp({1, 2, 1});
  Premutation pre = premutate(qp, 1);
  ASSERT_EQ(pre.composites.size(), 2u);
  EXPECT_EQ(pre.composites[0].l + pre.composites[1].l, 1);
  // [b a] a* eps b* + [b eps a] a* b*
  ASSERT_EQ(pre.qp.potential.terms.size(), 2u);
  for (const auto& [w, c] : pre.qp.potential.terms) {
    EXPECT_EQ(word_length(w), 3);
    // one eps in each term, either inside the composite arrow or on the word
    int loops = 0;
    for (auto [l, a] : w) {
      loops += l;
      if (a >= pre.first_composite) loops += pre.composites[a - pre.first_composite].l;
    }
    EXPECT_EQ(loops, 1);
  }
}

TEST(SplitReduce, PremutatedThreeCycle) {
  Premutation pre = premutate(three_cycle_qp({1, 1, 1}), 1);
  SplitResult s = split_reduce(pre.qp);
  EXPECT_EQ(s.trivial.quiver.arrows.size(), 2u);
  EXPECT_EQ(s.trivial.potential.terms.size(), 1u);
  EXPECT_EQ(s.reduced.quiver.arrows.size(), 2u);
  EXPECT_TRUE(s.reduced.potential.is_zero());
}

TEST(SplitReduce, ReducedInputIsUnchanged) {
  QP qp = three_cycle_qp({1, 1, 1});
  SplitResult s = split_reduce(qp);
  EXPECT_TRUE(s.trivial.quiver.arrows.empty());
  EXPECT_EQ(s.reduced.quiver.arrows, qp.quiver.arrows);
  EXPECT_EQ(s.reduced.potential, qp.potential);
}

TEST(SplitReduce, DegenerateTwoCycle) {
  // a two-cycle a:1->2, b:2->1 with zero potential cannot be removed
  QP qp;
  qp.quiver.n = 2;
  qp.quiver.datum = MutationDatum::standard({1, 1});
  qp.quiver.arrows = {{0, 1}, {1, 0}};
  EXPECT_THROW(split_reduce(qp), DegeneratePotential);
}

TEST(MutateQP, ThreeCycleBecomesA3) {
  QP m = mutate_qp(three_cycle_qp({1, 1, 1}), 1);
  ASSERT_EQ(m.quiver.arrows.size(), 2u);
  EXPECT_EQ(m.quiver.count(1, 0), 1);
  EXPECT_EQ(m.quiver.count(2, 1), 1);
  EXPECT_TRUE(m.potential.is_zero());
  EXPECT_TRUE(is_reduced(m));
}

TEST(MutateQP, ZeroPotentialWithoutPathsThroughK) {
  QP qp;
  qp.quiver.n = 3;
  qp.quiver.datum = MutationDatum::standard({1, 1, 1});
  qp.quiver.arrows = {{0, 1}, {2, 1}};
  QP m = mutate_qp(qp, 1);
  EXPECT_TRUE(m.potential.is_zero());
  EXPECT_EQ(m.quiver.arrows.size(), 2u);
}

TEST(MutateQP, MatchesMatrixMutation) {
  for (const auto& e : example_library()) {
    for (int k = 0; k < e.qp.quiver.n; ++k) {
      QP m = mutate_qp(e.qp, k);
      EXPECT_EQ(m.quiver.b_matrix(), mutate_matrix(e.qp.quiver.b_matrix(), e.qp.quiver.d(), k)) << e.name;
    }
  }
}

TEST(MutateQP, InvolutionOnLibrary) {
  for (const auto& e : example_library()) {
    for (int k = 0; k < e.qp.quiver.n; ++k) {
      QP twice = normalize_arrow_order(mutate_qp(mutate_qp(e.qp, k), k));
      QP orig = normalize_arrow_order(e.qp);
      EXPECT_EQ(twice.quiver.arrows, orig.quiver.arrows) << e.name << " k=" << k;
      EXPECT_EQ(twice.potential, orig.potential) << e.name << " k=" << k;
    }
  }
}

TEST(RandomPotential, AcyclicQuiverHasNone) {
  EXPECT_TRUE(random_potential(path_qp({2, 2, 2}).quiver, 6, 3, 1).is_zero());
  EXPECT_TRUE(cyclic_words(path_qp({1, 1, 1}).quiver, 6).empty());
}

TEST(RandomPotential, DeterministicAndBounded) {
  QP qp = three_cycle_qp({2, 1, 2});
  Potential a = random_potential(qp.quiver, 6, 2, 99), b = random_potential(qp.quiver, 6, 2, 99);
  EXPECT_EQ(a, b);
  for (const auto& [w, c] : a.terms) {
    EXPECT_LE(abs(c), 2);
    EXPECT_LE(word_length(w), 6);
  }
}

TEST(RandomPotential, CubicTermFrequency) {
  // with coefficients uniform in [-1, 1] the cubic word is present with probability 2/3
  QP qp = three_cycle_qp({1, 1, 1});
  CyclicWord cba = canonical({{0, 2}, {0, 1}, {0, 0}});
  int present = 0, trials = 300;
  for (int s = 0; s < trials; ++s) present += random_potential(qp.quiver, 3, 1, s).terms.count(cba) ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(present) / trials, 2.0 / 3.0, 0.1);
}

TEST(Jacobian, CornerDimensionInvariantUnderMutation) {
  for (const std::vector<int>& d : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 1}}) {
    QP qp = three_cycle_qp(d);
    JacobianAlgebra j = finite_jacobian_algebra(qp);
    for (int k = 0; k < 3; ++k) {
      JacobianAlgebra jm = finite_jacobian_algebra(mutate_qp(qp, k));
      EXPECT_EQ(corner_dimension(j, k), corner_dimension(jm, k)) << "k=" << k;
    }
  }
}

TEST(Jacobian, ThreeCycleDimension) {
  // e_i, a, b, c: the length-two paths are cyclic derivatives
  JacobianAlgebra j = finite_jacobian_algebra(three_cycle_qp({1, 1, 1}));
  EXPECT_EQ(j.dim(), 6);
  EXPECT_TRUE(local_freeness(j).all());
}
