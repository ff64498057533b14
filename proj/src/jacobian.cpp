#include "hqp/jacobian.hpp"

#include <algorithm>
#include <functional>

#include "hqp/errors.hpp"

namespace hqp {

namespace {

void enumerate(const HQuiver& q, int max_len, std::vector<Path>& out) {
  const auto& d = q.datum.d;
  // arrow sequences, composed right to left: a_0 is applied last
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  std::function<void()> grow = [&]() {
    seqs.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      if (!cur.empty() && q.arrows[cur.back()].tail != q.arrows[a].head) continue;
      cur.push_back(static_cast<int>(a));
      grow();
      cur.pop_back();
    }
  };
  cur.clear();
  for (size_t a = 0; a < q.arrows.size() && max_len > 0; ++a) {
    cur = {static_cast<int>(a)};
    grow();
  }
  for (int v = 0; v < q.n; ++v)
    for (int l = 0; l < d[v]; ++l) out.push_back(Path::idempotent(v, l));
  for (const auto& s : seqs) {
    Path p;
    p.arrows = s;
    p.head = q.arrows[s.front()].head;
    p.tail = q.arrows[s.back()].tail;
    int m = static_cast<int>(s.size());
    std::vector<int> bound(m + 1);
    for (int i = 0; i < m; ++i) bound[i] = d[q.arrows[s[i]].head];
    bound[m] = d[p.tail];
    std::vector<int> l(m + 1, 0);
    while (true) {
      p.loops = l;
      out.push_back(p);
      int i = 0;
      while (i <= m) {
        if (++l[i] < bound[i]) break;
        l[i] = 0;
        ++i;
      }
      if (i > m) break;
    }
  }
}

}  // namespace

std::vector<Q> JacobianAlgebra::normal_form(const Element& e) const {
  std::vector<Q> x(paths.size());
  for (const auto& [p, c] : e) {
    auto it = index.find(p);
    if (it != index.end()) x[it->second] += c;
  }
  for (size_t r = 0; r < ideal.pivots.size(); ++r) {
    int pc = ideal.pivots[r];
    if (x[pc] == 0) continue;
    Q f = x[pc];
    for (size_t j = 0; j < paths.size(); ++j)
      if (ideal.r(static_cast<int>(r), static_cast<int>(j)) != 0) x[j] -= f * ideal.r(static_cast<int>(r), static_cast<int>(j));
  }
  std::vector<Q> out(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) out[i] = x[basis[i]];
  return out;
}

JacobianAlgebra jacobian_algebra(const QP& qp, int max_len) {
  JacobianAlgebra j;
  j.quiver = qp.quiver;
  j.max_len = max_len;
  enumerate(qp.quiver, max_len, j.paths);
  // Longest paths first so that they become pivots and the quotient basis
  // prefers short paths.
  std::stable_sort(j.paths.begin(), j.paths.end(),
                   [](const Path& a, const Path& b) { return a.length() > b.length(); });
  for (size_t i = 0; i < j.paths.size(); ++i) j.index[j.paths[i]] = static_cast<int>(i);

  const auto& d = qp.quiver.datum.d;
  TruncCtx ctx{&d, max_len, false};
  std::vector<std::vector<Q>> rows;
  int np = static_cast<int>(j.paths.size());
  for (size_t a = 0; a < qp.quiver.arrows.size(); ++a) {
    Element r = cyclic_derivative(qp, static_cast<int>(a));
    if (r.empty()) continue;
    int h = r.begin()->first.head, t = r.begin()->first.tail;
    for (const auto& u : j.paths) {
      if (u.tail != h) continue;
      Element ur = mul(element_of(u), r, ctx);
      if (ur.empty()) continue;
      for (const auto& w : j.paths) {
        if (w.head != t) continue;
        Element g = mul(ur, element_of(w), ctx);
        if (g.empty()) continue;
        std::vector<Q> row(np);
        for (const auto& [p, c] : g) row[j.index.at(p)] = c;
        rows.push_back(std::move(row));
      }
    }
  }
  Mat m(static_cast<int>(rows.size()), np);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < np; ++c) m(static_cast<int>(r), c) = rows[r][c];
  j.ideal = rref(m);
  j.ideal.r = j.ideal.r.block(0, 0, static_cast<int>(j.ideal.pivots.size()), np);
  std::vector<bool> piv(np, false);
  for (int p : j.ideal.pivots) piv[p] = true;
  j.basis_pos.assign(np, -1);
  for (int i = 0; i < np; ++i)
    if (!piv[i]) {
      j.basis_pos[i] = static_cast<int>(j.basis.size());
      j.basis.push_back(i);
    }
  j.finite = true;
  for (int i = 0; i < np; ++i)
    if (j.paths[i].length() == max_len && !piv[i]) j.finite = false;
  if (max_len == 0 && !qp.quiver.arrows.empty()) j.finite = false;
  return j;
}

JacobianAlgebra finite_jacobian_algebra(const QP& qp, int cap) {
  for (int n = 1; n <= cap; ++n) {
    JacobianAlgebra j = jacobian_algebra(qp, n);
    if (j.finite) return j;
  }
  throw TruncationLoss("Jacobian algebra did not stabilize up to path length " + std::to_string(cap));
}

int corner_dimension(const JacobianAlgebra& j, int k) {
  int c = 0;
  for (int b : j.basis)
    if (j.paths[b].head != k && j.paths[b].tail != k) ++c;
  return c;
}

bool LocalFreeness::all() const {
  for (bool b : left)
    if (!b) return false;
  for (bool b : right)
    if (!b) return false;
  return true;
}

LocalFreeness local_freeness(const JacobianAlgebra& j) {
  const auto& q = j.quiver;
  const auto& d = q.datum.d;
  LocalFreeness lf;
  TruncCtx ctx{&d, j.max_len, false};
  for (int k = 0; k < q.n; ++k) {
    for (int side = 0; side < 2; ++side) {
      std::vector<int> sel;
      for (int b = 0; b < j.dim(); ++b) {
        const Path& p = j.basis_path(b);
        if ((side == 0 ? p.head : p.tail) == k) sel.push_back(b);
      }
      int s = static_cast<int>(sel.size());
      Mat op(s, s);
      Element eps = element_of(Path::idempotent(k, 1));
      for (int c = 0; c < s; ++c) {
        Element p = element_of(j.basis_path(sel[c]));
        Element prod = side == 0 ? mul(eps, p, ctx) : mul(p, eps, ctx);
        auto nf = j.normal_form(prod);
        for (int r = 0; r < s; ++r) op(r, c) = nf[sel[r]];
      }
      bool ok = true;
      if (d[k] > 1 || s > 0) {
        if (s % d[k] != 0) {
          ok = false;
        } else if (s > 0) {
          auto bl = nilpotent_jordan_type(op);
          for (size_t z = 1; z < bl.size(); ++z)
            if (bl[z] != 0 && static_cast<int>(z) != d[k]) ok = false;
        }
      }
      (side == 0 ? lf.left : lf.right).push_back(ok);
    }
  }
  return lf;
}

}  // namespace hqp
