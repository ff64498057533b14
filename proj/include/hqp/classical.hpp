#pragma once

#include <vector>

#include "hqp/poly.hpp"
#include "hqp/quiver.hpp"

namespace hqp {

// Cluster pattern with principal coefficients, computed from the extended
// 2n x n exchange matrix with the y_i as frozen variables.
struct ClassicalState {
  IntMat ext;                // rows 0..n-1: B_t, rows n..2n-1: C_t
  std::vector<RatFunc> x;    // X-functions in x1..xn, y1..yn
  VarsPtr ring;
};

ClassicalState classical_initial(const IntMat& b);
ClassicalState classical_mutate(const ClassicalState& s, int k);

// F = X(x = 1) in the variables y1..yn.
LaurentPoly classical_f(const ClassicalState& s, int l);
// Degree of X under deg x_i = e_i, deg y_j = -b_j (columns of the initial B).
std::vector<int> classical_g(const ClassicalState& s, const IntMat& b0, int l);
// c-vector of column j: the bottom half of the extended matrix.
std::vector<int> classical_c(const ClassicalState& s, int j);

}  // namespace hqp
