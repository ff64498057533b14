#pragma once

#include <map>
#include <vector>

#include "hqp/linalg.hpp"
#include "hqp/pathalg.hpp"

namespace hqp {

// Truncated Jacobian algebra P_{<=N} / (ideal generated by the cyclic
// derivatives, truncated at arrow-length N).
struct JacobianAlgebra {
  HQuiver quiver;
  int max_len = 0;
  std::vector<Path> paths;  // all paths of arrow-length <= max_len
  std::map<Path, int> index;
  RREF ideal;               // row-reduced spanning set of the ideal
  std::vector<int> basis;   // path indices spanning the quotient
  std::vector<int> basis_pos;
  bool finite = false;      // every path of length max_len lies in the ideal

  int dim() const { return static_cast<int>(basis.size()); }
  // Coordinates of an element in the quotient basis. Terms longer than
  // max_len are dropped.
  std::vector<Q> normal_form(const Element& e) const;
  const Path& basis_path(int i) const { return paths[basis[i]]; }
};

JacobianAlgebra jacobian_algebra(const QP& qp, int max_len);
// Increases the truncation until every maximal-length path vanishes. Throws
// TruncationLoss if that does not happen up to `cap`.
JacobianAlgebra finite_jacobian_algebra(const QP& qp, int cap = 8);

// dim of the sum of e_i J e_j over i, j != k.
int corner_dimension(const JacobianAlgebra& j, int k);

struct LocalFreeness {
  std::vector<bool> left;   // e_k J free over H_k (left multiplication by eps_k)
  std::vector<bool> right;  // J e_k free over H_k (right multiplication)
  bool all() const;
  bool agree() const { return left == right; }
};
LocalFreeness local_freeness(const JacobianAlgebra& j);

}  // namespace hqp
