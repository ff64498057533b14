#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqp/jacobian.hpp"
#include "hqp/linalg.hpp"
#include "hqp/pathalg.hpp"

namespace hqp {

// Decorated representation: M_i with a nilpotent loop action E_i, a matrix
// M(a): M_{t(a)} -> M_{h(a)} per arrow, and v_i free copies of H_i.
struct DecoratedRep {
  std::vector<int> dims;
  std::vector<Mat> E;
  std::vector<Mat> arrows;
  std::vector<int> v;

  int n() const { return static_cast<int>(dims.size()); }
  int total_dim() const;
  bool operator==(const DecoratedRep& o) const {
    return dims == o.dims && E == o.E && arrows == o.arrows && v == o.v;
  }
};

// Action of eps on `copies` free copies of K[eps]/eps^d: Jordan blocks
// e_{j} -> e_{j+1} inside each copy.
Mat free_h_action(int d, int copies);

DecoratedRep zero_rep(const HQuiver& q);
DecoratedRep negative_simple(const HQuiver& q, int k);     // (0, H_k)
DecoratedRep generalized_simple(const HQuiver& q, int k);  // E_k = H_k at k
DecoratedRep direct_sum(const DecoratedRep& a, const DecoratedRep& b);

// Matrix of an element of the path algebra acting on M. `from`/`to` are the
// tail/head vertices (needed for the shape of an empty element).
Mat eval(const Element& e, const HQuiver& q, const DecoratedRep& m, int from, int to);
Mat eval_path(const Path& p, const HQuiver& q, const DecoratedRep& m);

struct RepCheck {
  bool ok = true;
  std::string violation;
};
// Throws StructuralError on shape mismatch.
RepCheck check_rep(const QP& qp, const DecoratedRep& m);
void check_shapes(const HQuiver& q, const DecoratedRep& m);

// The triangle M_out --gamma--> M_in --alpha--> M_k --beta--> M_out at k.
// M_in has blocks (a, l) for arrows a into k and 0 <= l < d_k, M_out has
// blocks (b, f) for arrows b out of k.
struct TriangleMaps {
  int k = 0;
  int d = 1;
  Mat alpha, beta, gamma;
  Mat e_in, e_out, e_k;
  std::vector<std::pair<int, int>> in_blocks, out_blocks;  // (arrow, power)
  std::vector<int> in_offset, out_offset;
  int dim_in() const { return alpha.cols(); }
  int dim_out() const { return beta.rows(); }
};
TriangleMaps triangle(const QP& qp, const DecoratedRep& m, int k);

struct LocalWeights {
  int beta_plus = 0, beta_minus = 0;    // rank coker alpha, rank ker alpha / im gamma
  int cbeta_plus = 0, cbeta_minus = 0;  // rank ker beta, rank ker gamma / im beta
};
// H_k-ranks of the four subquotients; the decoration is added to the
// negative parts. Throws NotLocallyFreeWitness when one of them is not free.
LocalWeights local_weights(const TriangleMaps& t, int vk);

struct WeightVectors {
  std::vector<int> g, gcheck;
  std::vector<int> beta_plus, beta_minus, cbeta_plus, cbeta_minus;
  bool operator==(const WeightVectors& o) const {
    return g == o.g && gcheck == o.gcheck && beta_plus == o.beta_plus && beta_minus == o.beta_minus &&
           cbeta_plus == o.cbeta_plus && cbeta_minus == o.cbeta_minus;
  }
};
WeightVectors weight_vectors(const QP& qp, const DecoratedRep& m);

// Jordan type per vertex: t[k][l] = number of size-l blocks of M(d_eps S) on
// ker E_k / im E_k (index 0 unused).
std::vector<std::vector<int>> jordan_type(const QP& qp, const DecoratedRep& m);

struct RepMutation {
  MutationResult qpm;      // premutation and reduction of the QP
  DecoratedRep premutated; // representation of the premutated QP
  DecoratedRep rep;        // representation of the reduced mutated QP
  LocalWeights before;     // weights at k of the input
};
// `descending` switches the pivot order used for the splitting data.
RepMutation mutate_rep(const QP& qp, const DecoratedRep& m, int k, bool descending = false);

// Transports a representation along a reduction log.
DecoratedRep transport(const SplitResult& split, const HQuiver& source, const DecoratedRep& m);

// Dimension of the space of homomorphisms M -> N (decorations ignored).
int hom_dim(const HQuiver& q, const DecoratedRep& m, const DecoratedRep& n);

// Indecomposable injective D(e_i J) of a finite Jacobian algebra.
DecoratedRep injective(const JacobianAlgebra& j, int i);

// Kernel of a random map I([-gc]_+) -> I([gc]_+), decorated so that its
// gcheck-vector equals gc. Retries with fresh coefficients; throws
// GenericityFailure after `trials` attempts.
DecoratedRep random_kernel_rep(const QP& qp, const std::vector<int>& gc, int trials, std::uint64_t seed,
                               const JacobianAlgebra* j = nullptr);

}  // namespace hqp
