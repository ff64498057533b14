#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqp/rational.hpp"

namespace hqp {

// Dense exact rational matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Q& c) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& b);
  Mat col(int j) const { return block(0, j, r_, 1); }
  Mat cols_subset(const std::vector<int>& idx) const;
  Mat rows_subset(const std::vector<int>& idx) const;
  bool is_zero() const;
  Mat pow(int k) const;

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const std::vector<Mat>& blocks);

struct RREF {
  Mat r;
  std::vector<int> pivots;  // pivot columns, in row order
};

// Row reduction. When `descending` is set, columns are scanned from right to
// left, which changes the choice of pivots (and hence of particular solutions).
RREF rref(const Mat& a, bool descending = false);
int rank(const Mat& a);
Mat nullspace(const Mat& a, bool descending = false);  // columns form a basis
Mat image_basis(const Mat& a);                          // independent columns of a
Q det(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
// Some X with a X = b, free variables set to zero.
std::optional<Mat> solve(const Mat& a, const Mat& b, bool descending = false);

// Basis columns of U extended by standard basis vectors to a basis of K^n.
// Returns the chosen complement columns.
Mat complement_basis(const Mat& u, int n);
// Intersection of two column spaces.
Mat intersect(const Mat& u, const Mat& w);
// Sum of two column spaces (basis).
Mat span_sum(const Mat& u, const Mat& w);

// Matrix X with e * u = u * X, for an e-invariant subspace spanned by the
// (independent) columns of u.
Mat restrict_operator(const Mat& e, const Mat& u);

// Subquotient W/U of K^n (U inside W, both given by basis columns), with a
// chosen complement basis for the quotient.
struct Subquotient {
  Mat w;     // basis of W (columns)
  Mat u;     // basis of U (columns)
  Mat reps;  // complement of U in W: representatives of a quotient basis
  Mat proj;  // proj * x = coordinates of the class of x (x in W) in the reps basis
  int dim() const { return reps.cols(); }
};
Subquotient make_subquotient(const Mat& w, const Mat& u, int n);
// Induced operator on a subquotient (e must preserve both W and U).
Mat induced_operator(const Mat& e, const Subquotient& sq);

// Jordan type of a nilpotent operator: blocks[s] = number of blocks of size s
// (index 0 unused). Throws if the operator is not nilpotent.
std::vector<int> nilpotent_jordan_type(const Mat& e);

}  // namespace hqp
