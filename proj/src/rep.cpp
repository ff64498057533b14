#include "hqp/rep.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hqp/errors.hpp"

namespace hqp {

int DecoratedRep::total_dim() const {
  int s = 0;
  for (int x : dims) s += x;
  return s;
}

Mat free_h_action(int d, int copies) {
  Mat e(d * copies, d * copies);
  for (int c = 0; c < copies; ++c)
    for (int j = 0; j + 1 < d; ++j) e(c * d + j + 1, c * d + j) = 1;
  return e;
}

DecoratedRep zero_rep(const HQuiver& q) {
  DecoratedRep m;
  m.dims.assign(q.n, 0);
  m.E.assign(q.n, Mat(0, 0));
  m.arrows.assign(q.arrows.size(), Mat(0, 0));
  m.v.assign(q.n, 0);
  return m;
}

DecoratedRep negative_simple(const HQuiver& q, int k) {
  DecoratedRep m = zero_rep(q);
  m.v[k] = 1;
  return m;
}

DecoratedRep generalized_simple(const HQuiver& q, int k) {
  DecoratedRep m = zero_rep(q);
  int d = q.datum.d[k];
  m.dims[k] = d;
  m.E[k] = free_h_action(d, 1);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    m.arrows[a] = Mat(m.dims[q.arrows[a].head], m.dims[q.arrows[a].tail]);
  return m;
}

DecoratedRep direct_sum(const DecoratedRep& a, const DecoratedRep& b) {
  if (a.n() != b.n() || a.arrows.size() != b.arrows.size()) throw StructuralError("direct sum of reps of different quivers");
  DecoratedRep s;
  for (int i = 0; i < a.n(); ++i) {
    s.dims.push_back(a.dims[i] + b.dims[i]);
    s.E.push_back(block_diag({a.E[i], b.E[i]}));
    s.v.push_back(a.v[i] + b.v[i]);
  }
  for (size_t x = 0; x < a.arrows.size(); ++x) s.arrows.push_back(block_diag({a.arrows[x], b.arrows[x]}));
  return s;
}

Mat eval_path(const Path& p, const HQuiver& q, const DecoratedRep& m) {
  auto loop = [&](int v, int l) { return m.E[v].pow(l); };
  if (p.arrows.empty()) return loop(p.head, p.loops[0]);
  Mat r = loop(p.head, p.loops[0]);
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    int a = p.arrows[i];
    r = r * m.arrows[a];
    int v = q.arrows[a].tail;
    if (p.loops[i + 1] > 0) r = r * loop(v, p.loops[i + 1]);
  }
  return r;
}

Mat eval(const Element& e, const HQuiver& q, const DecoratedRep& m, int from, int to) {
  Mat r(m.dims[to], m.dims[from]);
  for (const auto& [p, c] : e) {
    if (p.head != to || p.tail != from) throw StructuralError("element is not homogeneous");
    r = r + eval_path(p, q, m).scaled(c);
  }
  return r;
}

void check_shapes(const HQuiver& q, const DecoratedRep& m) {
  if (m.n() != q.n || static_cast<int>(m.E.size()) != q.n || static_cast<int>(m.v.size()) != q.n)
    throw StructuralError("representation has wrong number of vertices");
  if (m.arrows.size() != q.arrows.size()) throw StructuralError("representation has wrong number of arrows");
  for (int i = 0; i < q.n; ++i) {
    if (m.dims[i] < 0 || m.v[i] < 0) throw StructuralError("negative dimension or decoration");
    if (m.E[i].rows() != m.dims[i] || m.E[i].cols() != m.dims[i])
      throw StructuralError("loop matrix at vertex " + std::to_string(i + 1) + " has wrong shape");
  }
  for (size_t a = 0; a < q.arrows.size(); ++a)
    if (m.arrows[a].rows() != m.dims[q.arrows[a].head] || m.arrows[a].cols() != m.dims[q.arrows[a].tail])
      throw StructuralError("matrix of arrow " + std::to_string(a + 1) + " has wrong shape");
}

RepCheck check_rep(const QP& qp, const DecoratedRep& m) {
  const auto& q = qp.quiver;
  check_shapes(q, m);
  for (int i = 0; i < q.n; ++i)
    if (!m.E[i].pow(q.datum.d[i]).is_zero())
      return {false, "E_" + std::to_string(i + 1) + "^" + std::to_string(q.datum.d[i]) + " is not zero"};
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    Element r = cyclic_derivative(qp, static_cast<int>(a));
    if (!eval(r, q, m, q.arrows[a].head, q.arrows[a].tail).is_zero())
      return {false, "cyclic derivative by arrow " + std::to_string(a + 1) + " does not vanish"};
  }
  return {};
}

namespace {

int composite_id(const Premutation& pm, int a, int b, int l) {
  for (size_t i = 0; i < pm.composites.size(); ++i) {
    const auto& c = pm.composites[i];
    if (c.a == a && c.b == b && c.l == l) return pm.first_composite + static_cast<int>(i);
  }
  throw StructuralError("internal: composite arrow not found");
}

// Representation of the premutated quiver that agrees with m away from k,
// carries M(b) E^l M(a) on composites and zero on reversed arrows.
DecoratedRep composite_rep(const Premutation& pm, const HQuiver& q, const DecoratedRep& m) {
  DecoratedRep r = m;
  const auto& nq = pm.qp.quiver;
  r.arrows.resize(nq.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a)
    if (pm.reversed[a]) r.arrows[a] = Mat(m.dims[nq.arrows[a].head], m.dims[nq.arrows[a].tail]);
  for (size_t i = 0; i < pm.composites.size(); ++i) {
    const auto& c = pm.composites[i];
    r.arrows[pm.first_composite + i] = m.arrows[c.b] * m.E[pm.k].pow(c.l) * m.arrows[c.a];
  }
  return r;
}

TriangleMaps triangle_from(const Premutation& pm, const QP& qp, const DecoratedRep& m, int k) {
  const auto& q = qp.quiver;
  TriangleMaps t;
  t.k = k;
  t.d = q.datum.d[k];
  int d = t.d;
  int off = 0;
  for (int a : q.arrows_into(k))
    for (int l = 0; l < d; ++l) {
      t.in_blocks.emplace_back(a, l);
      t.in_offset.push_back(off);
      off += m.dims[q.arrows[a].tail];
    }
  int din = off;
  off = 0;
  for (int b : q.arrows_out_of(k))
    for (int f = 0; f < d; ++f) {
      t.out_blocks.emplace_back(b, f);
      t.out_offset.push_back(off);
      off += m.dims[q.arrows[b].head];
    }
  int dout = off;
  int mk = m.dims[k];
  t.e_k = m.E[k];
  t.alpha = Mat(mk, din);
  t.beta = Mat(dout, mk);
  t.gamma = Mat(din, dout);
  t.e_in = Mat(din, din);
  t.e_out = Mat(dout, dout);
  for (size_t i = 0; i < t.in_blocks.size(); ++i) {
    auto [a, l] = t.in_blocks[i];
    t.alpha.set_block(0, t.in_offset[i], m.E[k].pow(l) * m.arrows[a]);
    if (l + 1 < d) t.e_in.set_block(t.in_offset[i + 1], t.in_offset[i], Mat::identity(m.dims[q.arrows[a].tail]));
  }
  for (size_t i = 0; i < t.out_blocks.size(); ++i) {
    auto [b, f] = t.out_blocks[i];
    t.beta.set_block(t.out_offset[i], 0, m.arrows[b] * m.E[k].pow(d - f - 1));
    if (f + 1 < d) t.e_out.set_block(t.out_offset[i + 1], t.out_offset[i], Mat::identity(m.dims[q.arrows[b].head]));
  }
  DecoratedRep cr = composite_rep(pm, q, m);
  auto in_index = [&](int a, int l) {
    for (size_t i = 0; i < t.in_blocks.size(); ++i)
      if (t.in_blocks[i] == std::make_pair(a, l)) return static_cast<int>(i);
    return -1;
  };
  for (size_t j = 0; j < t.out_blocks.size(); ++j) {
    auto [b, f] = t.out_blocks[j];
    for (int a : q.arrows_into(k))
      for (int l = 0; l + f < d; ++l) {
        int c = composite_id(pm, a, b, l);
        Element der = cyclic_derivative(pm.qp, c);
        Mat blk = eval(der, pm.qp.quiver, cr, q.arrows[b].head, q.arrows[a].tail);
        t.gamma.set_block(t.in_offset[in_index(a, l + f)], t.out_offset[j], blk);
      }
  }
  return t;
}

std::string jordan_str(const std::vector<int>& bl) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (size_t s = 1; s < bl.size(); ++s)
    if (bl[s]) {
      os << (first ? "" : ", ") << bl[s] << "x" << s;
      first = false;
    }
  os << "]";
  return os.str();
}

// H-rank of the subquotient W/U of K^n under e; throws when it is not free.
int free_rank(const Mat& e, const Mat& w, const Mat& u, int n, int d, const std::string& what) {
  if (w.cols() == 0) return 0;
  Subquotient sq = make_subquotient(w, u, n);
  if (sq.dim() == 0) return 0;
  Mat op = induced_operator(e, sq);
  auto bl = nilpotent_jordan_type(op);
  for (size_t s = 1; s < bl.size(); ++s)
    if (bl[s] != 0 && static_cast<int>(s) != d)
      throw NotLocallyFreeWitness(what + " is not free over H_k (Jordan type " + jordan_str(bl) + ", d_k = " +
                                  std::to_string(d) + ")");
  return sq.dim() / d;
}

Mat image_of(const Mat& a) {
  if (a.cols() == 0 || a.rows() == 0) return Mat(a.rows(), 0);
  return image_basis(a);
}

Mat kernel_of(const Mat& a) {
  if (a.cols() == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::identity(a.cols());
  return nullspace(a);
}

// Basis vectors completing the columns of uc (coordinates in K^n) to a basis.
Mat complement_scan(const Mat& uc, int n, bool descending) {
  Mat cur = uc.cols() ? image_basis(uc) : Mat(n, 0);
  int r = cur.cols();
  std::vector<int> chosen;
  for (int t = 0; t < n && r < n; ++t) {
    int i = descending ? n - 1 - t : t;
    Mat e(n, 1);
    e(i, 0) = 1;
    Mat s = hstack(cur, e);
    if (rank(s) > r) {
      cur = s;
      ++r;
      chosen.push_back(i);
    }
  }
  Mat c(n, static_cast<int>(chosen.size()));
  for (size_t j = 0; j < chosen.size(); ++j) c(chosen[j], static_cast<int>(j)) = 1;
  return c;
}

// E-invariant complement C of U inside W (W = U + C, direct), built from
// generators of the top of W/U. Requires W/U to be free over K[E]/E^d.
Mat h_complement(const Mat& e, const Mat& w0, const Mat& u0, int d, bool descending, const std::string& what) {
  int n = e.rows();
  Mat w = w0.cols() ? image_basis(w0) : Mat(n, 0);
  Mat u = u0.cols() ? image_basis(u0) : Mat(n, 0);
  int dw = w.cols(), du = u.cols();
  if (dw == du) return Mat(n, 0);
  Mat s = span_sum(u, e * w);
  Mat sc(dw, 0);
  if (s.cols()) {
    auto x = solve(w, s);
    if (!x) throw StructuralError("internal: subspace not inside W");
    sc = *x;
  }
  Mat gens = w * complement_scan(sc, dw, descending);
  int t = gens.cols();
  Mat c(n, t * d);
  for (int g = 0; g < t; ++g) {
    Mat v = gens.col(g);
    for (int j = 0; j < d; ++j) {
      c.set_block(0, g * d + j, v);
      v = e * v;
    }
  }
  if (c.cols() != dw - du || rank(hstack(u, c)) != dw)
    throw NotLocallyFreeWitness(what + " is not free over H_k");
  return c;
}

// Restriction of a linear map x: K^a -> K^b to subspaces with bases ka, kb.
Mat restrict_map(const Mat& x, const Mat& ka, const Mat& kb) {
  if (ka.cols() == 0) return Mat(kb.cols(), 0);
  if (kb.cols() == 0) {
    if (!(x * ka).is_zero()) throw StructuralError("map does not preserve the subspaces");
    return Mat(0, ka.cols());
  }
  auto s = solve(kb, x * ka);
  if (!s) throw StructuralError("map does not preserve the subspaces");
  return *s;
}

}  // namespace

TriangleMaps triangle(const QP& qp, const DecoratedRep& m, int k) {
  check_shapes(qp.quiver, m);
  RepCheck rc = check_rep(qp, m);
  if (!rc.ok) throw PreconditionError("not a representation: " + rc.violation);
  Premutation pm = premutate(qp, k);
  return triangle_from(pm, qp, m, k);
}

LocalWeights local_weights(const TriangleMaps& t, int vk) {
  LocalWeights w;
  int d = t.d;
  int mk = t.alpha.rows(), din = t.dim_in(), dout = t.dim_out();
  Mat im_alpha = image_of(t.alpha);
  Mat ker_alpha = kernel_of(t.alpha);
  Mat im_gamma = image_of(t.gamma);
  Mat ker_gamma = kernel_of(t.gamma);
  Mat im_beta = image_of(t.beta);
  Mat ker_beta = kernel_of(t.beta);
  if (ker_alpha.rows() == 0) ker_alpha = Mat(din, 0);
  if (ker_gamma.rows() == 0) ker_gamma = Mat(dout, 0);
  if (ker_beta.rows() == 0) ker_beta = Mat(mk, 0);
  w.beta_plus = free_rank(t.e_k, Mat::identity(mk), im_alpha, mk, d, "coker alpha");
  w.beta_minus = free_rank(t.e_in, ker_alpha, im_gamma, din, d, "ker alpha / im gamma") + vk;
  w.cbeta_plus = free_rank(t.e_k, ker_beta, Mat(mk, 0), mk, d, "ker beta");
  w.cbeta_minus = free_rank(t.e_out, ker_gamma, im_beta, dout, d, "ker gamma / im beta") + vk;
  return w;
}

WeightVectors weight_vectors(const QP& qp, const DecoratedRep& m) {
  const auto& q = qp.quiver;
  WeightVectors wv;
  for (int k = 0; k < q.n; ++k) {
    TriangleMaps t = triangle(qp, m, k);
    LocalWeights lw = local_weights(t, m.v[k]);
    wv.beta_plus.push_back(lw.beta_plus);
    wv.beta_minus.push_back(lw.beta_minus);
    wv.cbeta_plus.push_back(lw.cbeta_plus);
    wv.cbeta_minus.push_back(lw.cbeta_minus);
    wv.g.push_back(lw.beta_minus - lw.beta_plus);
    wv.gcheck.push_back(lw.cbeta_minus - lw.cbeta_plus);
  }
  return wv;
}

std::vector<std::vector<int>> jordan_type(const QP& qp, const DecoratedRep& m) {
  const auto& q = qp.quiver;
  check_shapes(q, m);
  std::vector<std::vector<int>> t(q.n);
  for (int k = 0; k < q.n; ++k) {
    int mk = m.dims[k];
    t[k].assign(mk + 1, 0);
    if (mk == 0) continue;
    Mat x = eval(eps_derivative(qp, k), q, m, k, k);
    Mat ker = kernel_of(m.E[k]);
    Mat im = image_of(m.E[k]);
    if (ker.cols() == 0) continue;
    Subquotient sq = make_subquotient(ker, im, mk);
    if (sq.dim() == 0) continue;
    auto bl = nilpotent_jordan_type(induced_operator(x, sq));
    for (size_t s = 1; s < bl.size() && s < t[k].size(); ++s) t[k][s] = bl[s];
  }
  return t;
}

DecoratedRep transport(const SplitResult& split, const HQuiver& source, const DecoratedRep& m0) {
  DecoratedRep m = m0;
  HQuiver q = source;
  int cap = 64 + 4 * m0.total_dim();
  for (const auto& step : split.log) {
    if (const auto* lin = std::get_if<LinearChange>(&step)) {
      DecoratedRep r = m;
      for (size_t a = 0; a < q.arrows.size(); ++a)
        r.arrows[a] = eval(lin->image[a], q, m, q.arrows[a].tail, q.arrows[a].head);
      m = r;
    } else if (const auto* uni = std::get_if<UnitriangularChange>(&step)) {
      DecoratedRep cur = m;
      int it = 0;
      while (true) {
        DecoratedRep next = m;
        for (size_t a = 0; a < q.arrows.size(); ++a)
          if (!uni->delta[a].empty())
            next.arrows[a] = m.arrows[a] + eval(uni->delta[a], q, cur, q.arrows[a].tail, q.arrows[a].head);
        if (next == cur) break;
        cur = next;
        if (++it > cap) throw TruncationLoss("representation transport did not converge");
      }
      m = cur;
    } else {
      const auto& drop = std::get<DropArrows>(step);
      DecoratedRep r = m;
      HQuiver nq = q;
      r.arrows.clear();
      nq.arrows.clear();
      for (int a : drop.kept) {
        r.arrows.push_back(m.arrows[a]);
        nq.arrows.push_back(q.arrows[a]);
      }
      m = r;
      q = nq;
    }
  }
  return m;
}

RepMutation mutate_rep(const QP& qp, const DecoratedRep& m, int k, bool descending) {
  const auto& q = qp.quiver;
  check_shapes(q, m);
  if (!is_reduced(qp)) throw PreconditionError("mutation of representations needs a reduced QP");
  RepCheck rc = check_rep(qp, m);
  if (!rc.ok) throw PreconditionError("not a representation: " + rc.violation);
  RepMutation res;
  res.qpm.pre = premutate(qp, k);
  const Premutation& pm = res.qpm.pre;
  TriangleMaps t = triangle_from(pm, qp, m, k);
  res.before = local_weights(t, m.v[k]);
  int d = t.d;
  int din = t.dim_in(), dout = t.dim_out(), mk = m.dims[k];

  Mat ker_gamma = kernel_of(t.gamma);
  if (ker_gamma.rows() == 0) ker_gamma = Mat(dout, 0);
  Mat im_beta = image_of(t.beta);
  Mat im_gamma = image_of(t.gamma);
  Mat ker_alpha = kernel_of(t.alpha);
  if (ker_alpha.rows() == 0) ker_alpha = Mat(din, 0);

  // rho: H-linear retraction of M_out onto ker gamma.
  Mat comp = h_complement(t.e_out, Mat::identity(dout), ker_gamma, d, descending, "M_out / ker gamma");
  Mat rho(dout, dout);
  if (dout) {
    Mat basis = hstack(ker_gamma.cols() ? image_basis(ker_gamma) : Mat(dout, 0), comp);
    auto inv = inverse(basis);
    if (!inv) throw StructuralError("internal: splitting of M_out failed");
    int du = basis.cols() - comp.cols();
    rho = basis.block(0, 0, dout, du) * inv->block(0, 0, du, dout);
  }
  // K1 = ker gamma / im beta
  Subquotient k1;
  int n1 = 0;
  if (ker_gamma.cols()) {
    k1 = make_subquotient(ker_gamma, im_beta, dout);
    n1 = k1.dim();
  }
  // K2 = im gamma, K3 = ker alpha / im gamma with an H-linear section
  int n2 = im_gamma.cols();
  Mat c3 = h_complement(t.e_in, ker_alpha, im_gamma, d, descending, "ker alpha / im gamma");
  int n3 = c3.cols();
  int vk = m.v[k];
  int n4 = d * vk;
  int nk = n1 + n2 + n3 + n4;

  Mat alpha_bar(nk, dout), beta_bar(din, nk);
  if (n1) alpha_bar.set_block(0, 0, -(k1.proj * rho));
  if (n2) {
    auto x = solve(im_gamma, t.gamma);
    if (!x) throw StructuralError("internal: gamma not in its image");
    alpha_bar.set_block(n1, 0, -*x);
    beta_bar.set_block(0, n1, im_gamma);
  }
  if (n3) beta_bar.set_block(0, n1 + n2, c3);
  std::vector<Mat> eb;
  eb.push_back(n1 ? induced_operator(t.e_out, k1) : Mat(0, 0));
  eb.push_back(n2 ? restrict_operator(t.e_in, im_gamma) : Mat(0, 0));
  eb.push_back(n3 ? restrict_operator(t.e_in, c3) : Mat(0, 0));
  eb.push_back(free_h_action(d, vk));
  Mat e_bar = block_diag(eb);

  // New decoration at k: ker beta / (ker beta cap im alpha).
  Mat ker_beta = kernel_of(t.beta);
  if (ker_beta.rows() == 0) ker_beta = Mat(mk, 0);
  Mat meet = (ker_beta.cols() && t.alpha.cols()) ? intersect(ker_beta, image_of(t.alpha)) : Mat(mk, 0);
  if (meet.rows() == 0) meet = Mat(mk, 0);
  int vbar = free_rank(t.e_k, ker_beta, meet, mk, d, "ker beta / (ker beta cap im alpha)");

  const HQuiver& nq = pm.qp.quiver;
  DecoratedRep mb;
  mb.dims = m.dims;
  mb.dims[k] = nk;
  mb.E = m.E;
  mb.E[k] = e_bar;
  mb.v = m.v;
  mb.v[k] = vbar;
  mb.arrows.resize(nq.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (!pm.reversed[a]) {
      mb.arrows[a] = m.arrows[a];
      continue;
    }
    if (q.arrows[a].head == k) {
      // a: i -> k becomes a*: k -> i, read off the row block (a, d-1) of beta_bar
      for (size_t i = 0; i < t.in_blocks.size(); ++i)
        if (t.in_blocks[i] == std::make_pair(static_cast<int>(a), d - 1))
          mb.arrows[a] = beta_bar.block(t.in_offset[i], 0, m.dims[q.arrows[a].tail], nk);
    } else {
      // b: k -> j becomes b*: j -> k, column block (b, 0) of alpha_bar
      for (size_t i = 0; i < t.out_blocks.size(); ++i)
        if (t.out_blocks[i] == std::make_pair(static_cast<int>(a), 0))
          mb.arrows[a] = alpha_bar.block(0, t.out_offset[i], nk, m.dims[q.arrows[a].head]);
    }
  }
  for (size_t i = 0; i < pm.composites.size(); ++i) {
    const auto& c = pm.composites[i];
    mb.arrows[pm.first_composite + i] = m.arrows[c.b] * m.E[k].pow(c.l) * m.arrows[c.a];
  }
  res.premutated = mb;
  res.qpm.split = split_reduce(pm.qp);
  res.qpm.qp = res.qpm.split.reduced;
  res.rep = transport(res.qpm.split, nq, mb);
  return res;
}

int hom_dim(const HQuiver& q, const DecoratedRep& m, const DecoratedRep& n) {
  check_shapes(q, m);
  check_shapes(q, n);
  // unknown X_i: n_i x m_i, row-major, stacked by vertex
  std::vector<int> off(q.n + 1, 0);
  for (int i = 0; i < q.n; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  int nu = off[q.n];
  if (nu == 0) return 0;
  std::vector<std::vector<Q>> rows;
  // N(c) X_t - X_h M(c) = 0 for c: t -> h, including loops (t = h, E)
  auto add_eqs = [&](int t, int h, const Mat& nc, const Mat& mc) {
    int nh = n.dims[h], mt = m.dims[t], nt = n.dims[t], mh = m.dims[h];
    for (int r = 0; r < nh; ++r)
      for (int c = 0; c < mt; ++c) {
        std::vector<Q> row(nu);
        for (int s = 0; s < nt; ++s)
          if (nc(r, s) != 0) row[off[t] + s * mt + c] += nc(r, s);
        for (int s = 0; s < mh; ++s)
          if (mc(s, c) != 0) row[off[h] + r * mh + s] -= mc(s, c);
        rows.push_back(std::move(row));
      }
  };
  for (int i = 0; i < q.n; ++i) add_eqs(i, i, n.E[i], m.E[i]);
  for (size_t a = 0; a < q.arrows.size(); ++a) add_eqs(q.arrows[a].tail, q.arrows[a].head, n.arrows[a], m.arrows[a]);
  Mat sys(static_cast<int>(rows.size()), nu);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < nu; ++c) sys(static_cast<int>(r), c) = rows[r][c];
  return nu - rank(sys);
}

namespace {

std::vector<int> block_of(const JacobianAlgebra& j, int head, int tail) {
  std::vector<int> r;
  for (int b = 0; b < j.dim(); ++b) {
    const Path& p = j.basis_path(b);
    if (p.head == head && p.tail == tail) r.push_back(b);
  }
  return r;
}

// Matrix of f -> (q -> f(x q)) from D(e_i J e_v) to D(e_j J e_v), x in e_i J e_j.
Mat dual_left_mult(const JacobianAlgebra& j, const Element& x, int i, int jj, int v, TruncCtx& ctx) {
  auto src = block_of(j, i, v);
  auto tgt = block_of(j, jj, v);
  Mat r(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t t = 0; t < tgt.size(); ++t) {
    auto nf = j.normal_form(mul(x, element_of(j.basis_path(tgt[t])), ctx));
    for (size_t s = 0; s < src.size(); ++s) r(static_cast<int>(t), static_cast<int>(s)) = nf[src[s]];
  }
  return r;
}

}  // namespace

DecoratedRep injective(const JacobianAlgebra& j, int i) {
  const auto& q = j.quiver;
  const auto& d = q.datum.d;
  TruncCtx ctx{&d, j.max_len, false};
  DecoratedRep m = zero_rep(q);
  std::vector<std::vector<int>> blocks(q.n);
  for (int v = 0; v < q.n; ++v) {
    blocks[v] = block_of(j, i, v);
    m.dims[v] = static_cast<int>(blocks[v].size());
  }
  auto right_mult = [&](const Element& c, int from, int to) {
    // f in D(e_i J e_from) -> (q -> f(q c)) for q in e_i J e_to
    Mat r(m.dims[to], m.dims[from]);
    for (int t = 0; t < m.dims[to]; ++t) {
      auto nf = j.normal_form(mul(element_of(j.basis_path(blocks[to][t])), c, ctx));
      for (int s = 0; s < m.dims[from]; ++s) r(t, s) = nf[blocks[from][s]];
    }
    return r;
  };
  for (int v = 0; v < q.n; ++v) m.E[v] = right_mult(element_of(Path::idempotent(v, 1)), v, v);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    m.arrows[a] = right_mult(element_of(Path::arrow(q, static_cast<int>(a))), q.arrows[a].tail, q.arrows[a].head);
  return m;
}

DecoratedRep random_kernel_rep(const QP& qp, const std::vector<int>& gc, int trials, std::uint64_t seed,
                               const JacobianAlgebra* jp) {
  const auto& q = qp.quiver;
  if (static_cast<int>(gc.size()) != q.n) throw StructuralError("gcheck vector has wrong length");
  JacobianAlgebra owned;
  if (!jp) {
    owned = finite_jacobian_algebra(qp);
    jp = &owned;
  }
  const JacobianAlgebra& j = *jp;
  const auto& d = q.datum.d;
  TruncCtx ctx{&d, j.max_len, false};
  std::vector<int> src, tgt;  // vertex of each injective summand
  for (int i = 0; i < q.n; ++i) {
    for (int c = 0; c < std::max(0, -gc[i]); ++c) src.push_back(i);
    for (int c = 0; c < std::max(0, gc[i]); ++c) tgt.push_back(i);
  }
  DecoratedRep is = zero_rep(q);
  for (int i : src) is = direct_sum(is, injective(j, i));
  std::vector<DecoratedRep> inj(q.n);
  for (int i = 0; i < q.n; ++i) inj[i] = injective(j, i);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < std::max(1, trials); ++trial) {
    // random x_{st} in e_{src s} J e_{tgt t}
    std::vector<std::vector<Element>> x(src.size(), std::vector<Element>(tgt.size()));
    for (size_t s = 0; s < src.size(); ++s)
      for (size_t t = 0; t < tgt.size(); ++t)
        for (int b : block_of(j, src[s], tgt[t])) add_to(x[s][t], j.basis_path(b), coef(rng));
    DecoratedRep ker = zero_rep(q);
    std::vector<Mat> kb(q.n);
    for (int v = 0; v < q.n; ++v) {
      int rows = 0;
      for (int t : tgt) rows += inj[t].dims[v];
      Mat phi(rows, is.dims[v]);
      int c0 = 0;
      for (size_t s = 0; s < src.size(); ++s) {
        int r0 = 0;
        for (size_t t = 0; t < tgt.size(); ++t) {
          Mat blk = dual_left_mult(j, x[s][t], src[s], tgt[t], v, ctx);
          phi.set_block(r0, c0, blk);
          r0 += inj[tgt[t]].dims[v];
        }
        c0 += inj[src[s]].dims[v];
      }
      kb[v] = is.dims[v] ? kernel_of(phi) : Mat(0, 0);
      if (kb[v].rows() == 0) kb[v] = Mat(is.dims[v], 0);
      ker.dims[v] = kb[v].cols();
    }
    for (int v = 0; v < q.n; ++v) ker.E[v] = restrict_map(is.E[v], kb[v], kb[v]);
    for (size_t a = 0; a < q.arrows.size(); ++a)
      ker.arrows[a] = restrict_map(is.arrows[a], kb[q.arrows[a].tail], kb[q.arrows[a].head]);
    WeightVectors w0;
    try {
      w0 = weight_vectors(qp, ker);
    } catch (const NotLocallyFreeWitness&) {
      continue;
    }
    bool ok = true;
    DecoratedRep out = ker;
    for (int i = 0; i < q.n; ++i) {
      int vi = gc[i] - w0.gcheck[i];
      if (vi < 0 || w0.cbeta_plus[i] != std::max(0, -gc[i])) ok = false;
      out.v[i] = std::max(0, vi);
    }
    if (!ok) continue;
    if (weight_vectors(qp, out).gcheck == gc) return out;
  }
  throw GenericityFailure("no generic kernel representation found after " + std::to_string(trials) + " trials");
}

}  // namespace hqp
