#include <gtest/gtest.h>

#include "hqp/errors.hpp"
#include "hqp/foracle.hpp"
#include "hqp/gca.hpp"
#include "hqp/jacobian.hpp"
#include "hqp/library.hpp"
#include "hqp/rep.hpp"

using namespace hqp;

namespace {

QP single_vertex(int d) {
  QP qp;
  qp.quiver.n = 1;
  qp.quiver.datum = MutationDatum::standard({d});
  return qp;
}

Mat one_by_one(int v) {
  Mat m(1, 1);
  m(0, 0) = v;
  return m;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

LaurentPoly oracle_f(const QP& qp, const DecoratedRep& m) {
  return f_polynomial_oracle(qp, m, yz_ring(qp.quiver.n, qp.quiver.datum));
}

}  // namespace

TEST(CheckRep, ZeroModuleSatisfiesRelations) {
  QP qp = three_cycle_qp({1, 2, 1});
  DecoratedRep z = zero_rep(qp.quiver);
  z.v = {1, 0, 2};
  EXPECT_TRUE(check_rep(qp, z).ok);
}

TEST(CheckRep, ThreeCycleWithAllOnesViolatesRelations) {
  QP qp = three_cycle_qp({1, 1, 1});
  DecoratedRep m = zero_rep(qp.quiver);
  m.dims = {1, 1, 1};
  m.E = {Mat(1, 1), Mat(1, 1), Mat(1, 1)};
  m.arrows = {one_by_one(1), one_by_one(1), one_by_one(1)};
  RepCheck c = check_rep(qp, m);
  EXPECT_FALSE(c.ok);
  EXPECT_FALSE(c.violation.empty());
}

TEST(CheckRep, ShapeMismatchIsStructural) {
  QP qp = three_cycle_qp({1, 1, 1});
  DecoratedRep m = zero_rep(qp.quiver);
  m.dims = {1, 0, 0};
  EXPECT_THROW(check_shapes(qp.quiver, m), StructuralError);
}

TEST(Triangle, ZeroRep) {
  QP qp = three_cycle_qp({1, 1, 1});
  TriangleMaps t = triangle(qp, zero_rep(qp.quiver), 1);
  EXPECT_EQ(t.dim_in(), 0);
  EXPECT_EQ(t.dim_out(), 0);
  EXPECT_EQ(t.alpha.rows(), 0);
}

TEST(Triangle, A2Identity) {
  // a: 2 -> 1 with M(a) = id on K
  QP qp = rank2_qp({1, 1});
  qp.quiver.arrows = {{1, 0}};
  DecoratedRep m = zero_rep(qp.quiver);
  m.dims = {1, 1};
  m.E = {Mat(1, 1), Mat(1, 1)};
  m.arrows = {one_by_one(1)};
  TriangleMaps t = triangle(qp, m, 0);
  EXPECT_EQ(t.alpha, Mat::identity(1));
  EXPECT_EQ(t.dim_out(), 0);
  EXPECT_EQ(t.gamma.rows() * t.gamma.cols(), 0);
}

TEST(Weights, GeneralizedSimpleOnA2) {
  QP qp = rank2_qp({1, 1});
  qp.quiver.arrows = {{1, 0}};
  WeightVectors w = weight_vectors(qp, generalized_simple(qp.quiver, 0));
  EXPECT_EQ(w.beta_plus[0], 1);
  EXPECT_EQ(w.g[0], -1);
}

TEST(Weights, NegativeSimple) {
  QP qp = three_cycle_qp({2, 1, 1});
  for (int k = 0; k < 3; ++k) {
    WeightVectors w = weight_vectors(qp, negative_simple(qp.quiver, k));
    std::vector<int> e(3, 0);
    e[k] = 1;
    EXPECT_EQ(w.g, e);
    EXPECT_EQ(w.gcheck, e);
  }
}

TEST(JordanType, GeneralizedSimpleDegreeTwo) {
  QP qp = single_vertex(2);
  auto t = jordan_type(qp, generalized_simple(qp.quiver, 0));
  for (int x : t[0]) EXPECT_EQ(x, 0);
}

TEST(JordanType, SocleOfGeneralizedSimple) {
  QP qp = single_vertex(2);
  DecoratedRep n = zero_rep(qp.quiver);
  n.dims = {1};
  n.E = {Mat(1, 1)};
  auto t = jordan_type(qp, n);
  ASSERT_GE(t[0].size(), 2u);
  EXPECT_EQ(t[0][1], 1);
}

TEST(FOracle, GeneralizedSimples) {
  QP q1 = single_vertex(1);
  VarsPtr v1 = yz_ring(1, q1.quiver.datum);
  EXPECT_EQ(oracle_f(q1, generalized_simple(q1.quiver, 0)), LaurentPoly::parse(v1, "1 + y1"));
  QP q2 = single_vertex(2);
  VarsPtr v2 = yz_ring(1, q2.quiver.datum);
  EXPECT_EQ(oracle_f(q2, generalized_simple(q2.quiver, 0)), LaurentPoly::parse(v2, "1 + y1*z1 + y1^2"));
}

TEST(FOracle, NegativeSimpleIsOne) {
  QP qp = three_cycle_qp({1, 2, 1});
  LaurentPoly f = oracle_f(qp, negative_simple(qp.quiver, 1));
  EXPECT_TRUE(f.is_constant());
  EXPECT_EQ(f.constant_term(), 1);
}

TEST(FOracle, ChebyshevRecursion) {
  VarsPtr v = Vars::make({"z"});
  LaurentPoly z = LaurentPoly::variable(v, "z");
  EXPECT_EQ(f_chebyshev(z, 0), LaurentPoly::constant(v, 1));
  EXPECT_EQ(f_chebyshev(z, 1), z);
  EXPECT_EQ(f_chebyshev(z, 3), z * z * z - z.scaled(2));
}

TEST(FOracle, InterpolationRejectsNonPolynomialCounts) {
  std::vector<int> p{2, 3, 5, 7};
  // q^2 + 1 fits; the last value is perturbed in the second call
  EXPECT_EQ(euler_from_counts(p, {5, 10, 26, 50}), 2);
  EXPECT_THROW(euler_from_counts(p, {5, 10, 26, 51}), NonPolynomialCount);
}

TEST(KernelRep, PositiveUnitVectorIsNegativeSimple) {
  QP qp = three_cycle_qp({1, 1, 1});
  DecoratedRep m = random_kernel_rep(qp, {0, 1, 0}, 4, 1);
  EXPECT_EQ(m.total_dim(), 0);
  EXPECT_EQ(m.v, (std::vector<int>{0, 1, 0}));
  LaurentPoly f = oracle_f(qp, m);
  EXPECT_EQ(f.constant_term(), 1);
  EXPECT_TRUE(f.is_constant());
}

TEST(KernelRep, NegativeUnitVectorIsInjective) {
  QP qp = single_vertex(2);
  DecoratedRep m = random_kernel_rep(qp, {-1}, 4, 1);
  EXPECT_EQ(m.dims, std::vector<int>{2});
  EXPECT_EQ(weight_vectors(qp, m).gcheck, std::vector<int>{-1});
}

TEST(KernelRep, IndependentDrawsAgree) {
  QP qp = three_cycle_qp({1, 1, 1});
  JacobianAlgebra j = finite_jacobian_algebra(qp);
  for (const std::vector<int>& gc : {std::vector<int>{1, -1, 0}, std::vector<int>{-1, 0, 1}}) {
    WeightVectors a = weight_vectors(qp, random_kernel_rep(qp, gc, 8, 5, &j));
    WeightVectors b = weight_vectors(qp, random_kernel_rep(qp, gc, 8, 77, &j));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.gcheck, gc);
  }
}

TEST(MutateRep, InvolutionOnLibrary) {
  for (const auto& e : example_library()) {
    for (const auto& [name, m] : e.reps) {
      WeightVectors w = weight_vectors(e.qp, m);
      for (int k = 0; k < e.qp.quiver.n; ++k) {
        RepMutation once = mutate_rep(e.qp, m, k);
        RepMutation twice = mutate_rep(once.qpm.qp, once.rep, k);
        EXPECT_EQ(twice.rep.dims, m.dims) << e.name << " " << name << " k=" << k;
        EXPECT_EQ(twice.rep.v, m.v) << e.name << " " << name << " k=" << k;
        EXPECT_EQ(weight_vectors(twice.qpm.qp, twice.rep), w) << e.name << " " << name << " k=" << k;
        EXPECT_TRUE(check_rep(once.qpm.qp, once.rep).ok);
      }
    }
  }
}

TEST(MutateRep, GVectorRule) {
  for (const auto& e : example_library()) {
    IntMat b = e.qp.quiver.b_matrix();
    for (const auto& [name, m] : e.reps) {
      WeightVectors w = weight_vectors(e.qp, m);
      for (int k = 0; k < e.qp.quiver.n; ++k) {
        RepMutation r = mutate_rep(e.qp, m, k);
        WeightVectors w2 = weight_vectors(r.qpm.qp, r.rep);
        int dk = e.qp.quiver.d()[k];
        for (int i = 0; i < e.qp.quiver.n; ++i) {
          int want = i == k ? -w.g[k]
                            : w.g[i] + dk * std::max(-b[i][k], 0) * w.beta_minus[k] -
                                  dk * std::max(b[i][k], 0) * w.beta_plus[k];
          EXPECT_EQ(w2.g[i], want) << e.name << " " << name << " k=" << k << " i=" << i;
        }
      }
    }
  }
}

TEST(MutateRep, CommutesWithDirectSums) {
  for (const auto& e : example_library()) {
    if (e.reps.size() < 2) continue;
    for (size_t a = 0; a + 1 < e.reps.size(); ++a) {
      const DecoratedRep& m = e.reps[a].second;
      const DecoratedRep& n = e.reps[a + 1].second;
      for (int k = 0; k < e.qp.quiver.n; ++k) {
        RepMutation rm = mutate_rep(e.qp, m, k), rn = mutate_rep(e.qp, n, k);
        RepMutation rs = mutate_rep(e.qp, direct_sum(m, n), k);
        WeightVectors ws = weight_vectors(rs.qpm.qp, rs.rep);
        WeightVectors wm = weight_vectors(rm.qpm.qp, rm.rep), wn = weight_vectors(rn.qpm.qp, rn.rep);
        EXPECT_EQ(rs.rep.dims, add(rm.rep.dims, rn.rep.dims));
        EXPECT_EQ(rs.rep.v, add(rm.rep.v, rn.rep.v));
        EXPECT_EQ(ws.g, add(wm.g, wn.g));
        EXPECT_EQ(ws.gcheck, add(wm.gcheck, wn.gcheck));
      }
    }
  }
}

TEST(MutateRep, HomDifference) {
  for (const auto& e : example_library()) {
    for (int k = 0; k < e.qp.quiver.n; ++k) {
      int dk = e.qp.quiver.d()[k];
      for (const auto& [na, m] : e.reps)
        for (const auto& [nb, n] : e.reps) {
          RepMutation a = mutate_rep(e.qp, m, k), b = mutate_rep(e.qp, n, k);
          WeightVectors wm = weight_vectors(e.qp, m), wn = weight_vectors(e.qp, n);
          int lhs = hom_dim(a.qpm.qp.quiver, a.rep, b.rep) - hom_dim(e.qp.quiver, m, n);
          int rhs = dk * (wm.beta_minus[k] * wn.cbeta_minus[k] - wm.beta_plus[k] * wn.cbeta_plus[k]);
          EXPECT_EQ(lhs, rhs) << e.name << " " << na << " " << nb << " k=" << k;
        }
    }
  }
}
