#include "hqp/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "hqp/errors.hpp"

namespace hqp {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw StructuralError("matrix product shape mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Q& y = o(k, j);
        if (y != 0) m(i, j) += x * y;
      }
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw StructuralError("matrix sum shape mismatch");
  Mat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Mat Mat::scaled(const Q& c) const {
  Mat m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  Mat m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat m(r_, static_cast<int>(idx.size()));
  for (int i = 0; i < r_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return m;
}

Mat Mat::rows_subset(const std::vector<int>& idx) const {
  Mat m(static_cast<int>(idx.size()), c_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < c_; ++j) m(static_cast<int>(i), j) = (*this)(idx[i], j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::pow(int k) const {
  Mat r = identity(r_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw StructuralError("hstack row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw StructuralError("vstack column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

RREF rref(const Mat& a, bool descending) {
  RREF out{a, {}};
  Mat& m = out.r;
  int row = 0;
  for (int t = 0; t < m.cols() && row < m.rows(); ++t) {
    int col = descending ? m.cols() - 1 - t : t;
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Q inv = 1 / m(row, col);
    for (int j = 0; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Q f = m(i, col);
      for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivots.size()); }

Mat nullspace(const Mat& a, bool descending) {
  RREF rr = rref(a, descending);
  std::vector<bool> is_piv(a.cols(), false);
  for (int p : rr.pivots) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Mat n(a.cols(), static_cast<int>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    int fc = free[f];
    n(fc, static_cast<int>(f)) = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) n(rr.pivots[r], static_cast<int>(f)) = -rr.r(static_cast<int>(r), fc);
  }
  return n;
}

Mat image_basis(const Mat& a) {
  RREF rr = rref(a);
  std::vector<int> p = rr.pivots;
  std::sort(p.begin(), p.end());
  return a.cols_subset(p);
}

Q det(const Mat& a) {
  if (a.rows() != a.cols()) throw StructuralError("det of non-square matrix");
  Mat m = a;
  Q d = 1;
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Q f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  int n = a.rows();
  RREF rr = rref(hstack(a, Mat::identity(n)));
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(rr.pivots.size()) || rr.pivots[i] != i) return std::nullopt;
  return rr.r.block(0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b, bool descending) {
  if (a.rows() != b.rows()) throw StructuralError("solve shape mismatch");
  int n = a.cols();
  // Row-reduce [a | b] with pivots restricted to the a-part.
  Mat aug = hstack(a, b);
  Mat m = aug;
  std::vector<int> piv;
  int row = 0;
  for (int t = 0; t < n && row < m.rows(); ++t) {
    int col = descending ? n - 1 - t : t;
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Q inv = 1 / m(row, col);
    for (int j = 0; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Q f = m(i, col);
      for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  for (int i = row; i < m.rows(); ++i)
    for (int j = n; j < m.cols(); ++j)
      if (m(i, j) != 0) return std::nullopt;
  Mat x(n, b.cols());
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(piv[r], j) = m(static_cast<int>(r), n + j);
  return x;
}

Mat complement_basis(const Mat& u, int n) {
  Mat cur = u.cols() ? image_basis(u) : Mat(n, 0);
  std::vector<int> chosen;
  int r = cur.cols();
  for (int i = 0; i < n && r < n; ++i) {
    Mat e(n, 1);
    e(i, 0) = 1;
    Mat t = hstack(cur, e);
    if (rank(t) > r) {
      cur = t;
      ++r;
      chosen.push_back(i);
    }
  }
  Mat c(n, static_cast<int>(chosen.size()));
  for (size_t j = 0; j < chosen.size(); ++j) c(chosen[j], static_cast<int>(j)) = 1;
  return c;
}

Mat intersect(const Mat& u, const Mat& w) {
  int n = u.rows();
  if (u.cols() == 0 || w.cols() == 0) return Mat(n, 0);
  // Solve u a = w b  <=>  [u | -w] (a;b) = 0.
  Mat ns = nullspace(hstack(u, -w));
  Mat a = ns.block(0, 0, u.cols(), ns.cols());
  Mat v = u * a;
  if (v.cols() == 0) return Mat(n, 0);
  return image_basis(v);
}

Mat span_sum(const Mat& u, const Mat& w) {
  Mat s = hstack(u, w);
  if (s.cols() == 0) return s;
  return image_basis(s);
}

Mat restrict_operator(const Mat& e, const Mat& u) {
  if (u.cols() == 0) return Mat(0, 0);
  auto x = solve(u, e * u);
  if (!x) throw StructuralError("subspace is not invariant under the operator");
  return *x;
}

Subquotient make_subquotient(const Mat& w, const Mat& u, int n) {
  Subquotient sq;
  sq.w = w.cols() ? image_basis(w) : Mat(n, 0);
  sq.u = u.cols() ? image_basis(u) : Mat(n, 0);
  int dw = sq.w.cols(), du = sq.u.cols();
  // Express U in W-coordinates, then complete to a basis of W.
  Mat uc(dw, du);
  if (du) {
    auto s = solve(sq.w, sq.u);
    if (!s) throw StructuralError("subquotient: U is not contained in W");
    uc = *s;
  }
  Mat comp = complement_basis(uc, dw);
  sq.reps = sq.w * comp;
  // coordinates: x = W c, c = uc a + comp b, return b.
  Mat full = hstack(uc, comp);
  auto inv = inverse(full);
  if (!inv) throw StructuralError("subquotient basis is singular");
  Mat b_rows = inv->block(du, 0, dw - du, dw);
  // c = left inverse of W applied to x.
  Mat wt = sq.w.transpose();
  auto wl = inverse(wt * sq.w);
  if (dw && !wl) throw StructuralError("singular W basis");
  Mat left = dw ? (*wl) * wt : Mat(0, n);
  sq.proj = b_rows * left;
  return sq;
}

Mat induced_operator(const Mat& e, const Subquotient& sq) {
  return sq.proj * e * sq.reps;
}

std::vector<int> nilpotent_jordan_type(const Mat& e) {
  int n = e.rows();
  std::vector<int> ranks{n};
  Mat p = Mat::identity(n);
  while (ranks.back() > 0) {
    p = p * e;
    int r = rank(p);
    if (r == ranks.back()) throw StructuralError("operator is not nilpotent");
    ranks.push_back(r);
  }
  // ranks[s] = rank e^s; blocks of size >= s: ranks[s-1] - ranks[s].
  std::vector<int> blocks(ranks.size(), 0);
  for (size_t s = 1; s < ranks.size(); ++s) {
    int ge_s = ranks[s - 1] - ranks[s];
    int ge_s1 = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    blocks[s] = ge_s - ge_s1;
  }
  return blocks;
}

}  // namespace hqp
