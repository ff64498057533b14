#include "hqp/pathalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "hqp/errors.hpp"
#include "hqp/linalg.hpp"

namespace hqp {

Path Path::arrow(const HQuiver& q, int a) {
  const auto& ar = q.arrows.at(a);
  return {ar.head, ar.tail, {a}, {0, 0}};
}

bool Path::operator<(const Path& o) const {
  return std::tie(arrows, loops, head, tail) < std::tie(o.arrows, o.loops, o.head, o.tail);
}

std::string Path::str() const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const std::string& t) {
    if (!first) os << "*";
    os << t;
    first = false;
  };
  auto loop = [&](int l) {
    if (l > 0) put("eps" + (l > 1 ? "^" + std::to_string(l) : std::string()));
  };
  for (size_t i = 0; i < arrows.size(); ++i) {
    loop(loops[i]);
    put("a" + std::to_string(arrows[i] + 1));
  }
  loop(loops.back());
  if (first) put("e" + std::to_string(head + 1));
  return os.str();
}

std::optional<Path> path_mul(const Path& p, const Path& q, const std::vector<int>& d) {
  if (p.tail != q.head) return std::nullopt;
  int merged = p.loops.back() + q.loops.front();
  if (merged >= d[p.tail]) return std::nullopt;
  Path r;
  r.head = p.head;
  r.tail = q.tail;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  r.loops.assign(p.loops.begin(), p.loops.end() - 1);
  r.loops.push_back(merged);
  r.loops.insert(r.loops.end(), q.loops.begin() + 1, q.loops.end());
  return r;
}

void add_to(Element& e, const Path& p, const Q& c) {
  if (c == 0) return;
  auto it = e.find(p);
  if (it == e.end()) {
    e.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

void add_to(Element& e, const Element& f, const Q& c) {
  for (const auto& [p, x] : f) add_to(e, p, x * c);
}

Element mul(const Element& x, const Element& y, TruncCtx& ctx) {
  Element r;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) {
      if (p.length() + q.length() > ctx.trunc) {
        if (p.tail == q.head) ctx.lost = true;
        continue;
      }
      auto pq = path_mul(p, q, *ctx.d);
      if (pq) add_to(r, *pq, a * b);
    }
  return r;
}

Element element_of(const Path& p, const Q& c) {
  Element e;
  add_to(e, p, c);
  return e;
}

std::string element_str(const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : e) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << to_string(c) << ")*";
    os << p.str();
  }
  return os.str();
}

CyclicWord canonical(const CyclicWord& w) {
  CyclicWord best = w;
  CyclicWord cur = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::optional<CyclicWord> close_path(const Path& p, const std::vector<int>& d) {
  if (p.arrows.empty() || p.head != p.tail) return std::nullopt;
  int merged = p.loops.front() + p.loops.back();
  if (merged >= d[p.head]) return std::nullopt;
  CyclicWord w;
  for (size_t i = 0; i < p.arrows.size(); ++i) w.emplace_back(i == 0 ? merged : p.loops[i], p.arrows[i]);
  return canonical(w);
}

Path open_word(const CyclicWord& w, int start, const HQuiver& q) {
  int m = word_length(w);
  Path p;
  for (int t = 0; t < m; ++t) {
    const auto& [l, a] = w[(start + t) % m];
    p.loops.push_back(l);
    p.arrows.push_back(a);
  }
  p.loops.push_back(0);
  p.head = q.arrows[p.arrows.front()].head;
  p.tail = q.arrows[p.arrows.back()].tail;
  return p;
}

// The path left after deleting the arrow at position i and rotating.
static Path cut_at(const CyclicWord& w, int i, const HQuiver& q) {
  int m = word_length(w);
  Path p;
  for (int t = 1; t < m; ++t) {
    const auto& [l, a] = w[(i + t) % m];
    p.loops.push_back(l);
    p.arrows.push_back(a);
  }
  p.loops.push_back(w[i].first);
  const auto& ai = q.arrows[w[i].second];
  p.head = ai.tail;
  p.tail = ai.head;
  return p;
}

std::string word_str(const CyclicWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    if (w[i].first > 0) os << "eps^" << w[i].first << " ";
    os << "a" << w[i].second + 1;
  }
  return os.str();
}

void Potential::add(const CyclicWord& w, const Q& c) {
  if (c == 0) return;
  if (word_length(w) > trunc) {
    truncation_loss = true;
    return;
  }
  CyclicWord cw = canonical(w);
  auto it = terms.find(cw);
  if (it == terms.end()) {
    terms.emplace(cw, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void validate_qp(const QP& qp) {
  const auto& q = qp.quiver;
  if (static_cast<int>(q.datum.d.size()) != q.n) throw StructuralError("d has wrong length");
  for (const auto& a : q.arrows) {
    if (a.tail < 0 || a.tail >= q.n || a.head < 0 || a.head >= q.n)
      throw StructuralError("arrow endpoint out of range");
    if (a.tail == a.head) throw StructuralError("loops are implicit and may not be listed as arrows");
  }
  for (const auto& [w, c] : qp.potential.terms) {
    if (w.size() < 2) throw StructuralError("potential words need at least two arrows");
    if (c == 0) throw StructuralError("zero coefficient stored in potential");
    if (canonical(w) != w) throw StructuralError("potential word not in canonical rotation");
    int m = word_length(w);
    for (int i = 0; i < m; ++i) {
      int a = w[i].second;
      if (a < 0 || a >= static_cast<int>(q.arrows.size()))
        throw StructuralError("potential uses an unknown arrow");
      int h = q.arrows[a].head;
      if (w[i].first < 0 || w[i].first >= q.datum.d[h]) throw StructuralError("loop power out of range");
      int next = w[(i + 1) % m].second;
      if (q.arrows[a].tail != q.arrows[next].head) throw StructuralError("potential word is not a cycle");
    }
  }
}

static bool is_quadratic(const CyclicWord& w) {
  return w.size() == 2 && w[0].first == 0 && w[1].first == 0;
}

bool is_reduced(const QP& qp) {
  for (const auto& [w, c] : qp.potential.terms)
    if (is_quadratic(w)) return false;
  return true;
}

Element cyclic_derivative(const QP& qp, int arrow) {
  Element r;
  for (const auto& [w, c] : qp.potential.terms)
    for (int i = 0; i < word_length(w); ++i)
      if (w[i].second == arrow) add_to(r, cut_at(w, i, qp.quiver), c);
  return r;
}

Element eps_derivative(const QP& qp, int k) {
  Element r;
  const auto& q = qp.quiver;
  for (const auto& [w, c] : qp.potential.terms) {
    int m = word_length(w);
    for (int p = 0; p < m; ++p) {
      int L = w[p].first;
      if (L == 0 || q.arrows[w[p].second].head != k) continue;
      for (int j = 1; j <= L; ++j) {
        Path path;
        path.head = path.tail = k;
        for (int t = 0; t < m; ++t) {
          const auto& [l, a] = w[(p + t) % m];
          path.loops.push_back(t == 0 ? L - j : l);
          path.arrows.push_back(a);
        }
        path.loops.push_back(j - 1);
        add_to(r, path, c);
      }
    }
  }
  return r;
}

Premutation premutate(const QP& qp, int k) {
  const HQuiver& q = qp.quiver;
  if (k < 0 || k >= q.n) throw PreconditionError("mutation vertex out of range");
  for (int i = 0; i < q.n; ++i)
    if (i != k && q.count(i, k) && q.count(k, i))
      throw PreconditionError("2-cycle through vertex " + std::to_string(k + 1));
  Premutation pm;
  pm.k = k;
  int m = static_cast<int>(q.arrows.size());
  HQuiver& nq = pm.qp.quiver;
  nq.n = q.n;
  nq.datum = q.datum;
  pm.reversed.assign(m, false);
  for (int a = 0; a < m; ++a) {
    Arrow ar = q.arrows[a];
    if (ar.head == k || ar.tail == k) {
      std::swap(ar.head, ar.tail);
      pm.reversed[a] = true;
    }
    nq.arrows.push_back(ar);
  }
  pm.first_composite = m;
  int dk = q.datum.d[k];
  // composite index lookup: (a, b, l) -> new id
  std::map<std::tuple<int, int, int>, int> comp_id;
  for (int a : q.arrows_into(k))
    for (int b : q.arrows_out_of(k))
      for (int l = 0; l < dk; ++l) {
        comp_id[{a, b, l}] = static_cast<int>(nq.arrows.size());
        pm.composites.push_back({a, b, l});
        nq.arrows.push_back({q.arrows[a].tail, q.arrows[b].head});
      }
  Potential& ns = pm.qp.potential;
  ns.trunc = qp.potential.trunc;
  ns.truncation_loss = qp.potential.truncation_loss;
  // [S]
  for (const auto& [w0, c] : qp.potential.terms) {
    int len = word_length(w0);
    int s = 0;
    while (s < len && q.arrows[w0[s].second].head == k) ++s;
    if (s == len) throw StructuralError("potential word with all arrows into k");
    CyclicWord w;
    for (int t = 0; t < len; ++t) w.push_back(w0[(s + t) % len]);
    CyclicWord out;
    for (int i = 0; i < len; ++i) {
      int b = w[i].second;
      if (q.arrows[b].tail == k) {
        // next pair holds the arrow a into k
        int a = w[i + 1].second;
        out.emplace_back(w[i].first, comp_id.at({a, b, w[i + 1].first}));
        ++i;
      } else {
        out.push_back(w[i]);
      }
    }
    ns.add(out, c);
  }
  // Delta_k
  for (const auto& cp : pm.composites) {
    CyclicWord w{{0, comp_id.at({cp.a, cp.b, cp.l})}, {0, cp.a}, {dk - 1 - cp.l, cp.b}};
    ns.add(w, 1);
  }
  return pm;
}

Potential substitute(const Potential& s, const std::vector<std::optional<Element>>& images,
                     const HQuiver& source, const std::vector<int>& d, int trunc) {
  Potential out;
  out.trunc = trunc;
  out.truncation_loss = s.truncation_loss;
  TruncCtx ctx{&d, trunc, false};
  for (const auto& [w, c] : s.terms) {
    Element acc;
    bool trivial = true;
    for (const auto& [l, a] : w)
      if (a < static_cast<int>(images.size()) && images[a]) trivial = false;
    if (trivial) {
      out.add(w, c);
      continue;
    }
    int h0 = source.arrows[w[0].second].head;
    add_to(acc, Path::idempotent(h0, 0), 1);
    for (const auto& [l, a] : w) {
      int h = source.arrows[a].head;
      if (l > 0) acc = mul(acc, element_of(Path::idempotent(h, l)), ctx);
      const Element img = (a < static_cast<int>(images.size()) && images[a])
                              ? *images[a]
                              : element_of(Path::arrow(source, a));
      acc = mul(acc, img, ctx);
      if (acc.empty()) break;
    }
    for (const auto& [p, x] : acc) {
      auto cw = close_path(p, d);
      if (cw) out.add(*cw, c * x);
    }
  }
  if (ctx.lost) out.truncation_loss = true;
  return out;
}

namespace {

struct PairBlock {
  std::vector<int> xs, ys;  // arrows i -> j and j -> i
};

std::pair<std::vector<int>, std::vector<int>> choose_pivots(const Mat& c, const std::vector<int>& xs,
                                                            const std::vector<int>& ys) {
  int r = rank(c);
  std::vector<std::tuple<Q, int, int>> entries;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j)
      if (c(i, j) != 0) entries.emplace_back(abs(c(i, j)), i, j);
  std::stable_sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::make_pair(xs[std::get<1>(a)], ys[std::get<2>(a)]) <
           std::make_pair(xs[std::get<1>(b)], ys[std::get<2>(b)]);
  });
  std::vector<int> rows, cols;
  for (const auto& [v, i, j] : entries) {
    if (static_cast<int>(rows.size()) == r) break;
    if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
    if (std::find(cols.begin(), cols.end(), j) != cols.end()) continue;
    auto r2 = rows, c2 = cols;
    r2.push_back(i);
    c2.push_back(j);
    if (det(c.rows_subset(r2).cols_subset(c2)) != 0) {
      rows = r2;
      cols = c2;
    }
  }
  if (static_cast<int>(rows.size()) < r) {
    // Greedy got stuck; use row and column pivots instead.
    RREF rr = rref(c.transpose());
    rows = rr.pivots;
    RREF rc = rref(c.rows_subset(rows));
    cols = rc.pivots;
  }
  return {rows, cols};
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

SplitResult split_reduce(const QP& qp) {
  const HQuiver& q = qp.quiver;
  const auto& d = q.datum.d;
  int m = static_cast<int>(q.arrows.size());
  int trunc = qp.potential.trunc;
  SplitResult res;

  // Quadratic coefficients per unordered vertex pair.
  std::map<std::pair<int, int>, PairBlock> blocks;
  for (int a = 0; a < m; ++a) {
    const auto& ar = q.arrows[a];
    if (ar.tail < ar.head)
      blocks[{ar.tail, ar.head}].xs.push_back(a);
    else
      blocks[{ar.head, ar.tail}].ys.push_back(a);
  }
  std::vector<int> alphas, betas;
  LinearChange lin;
  lin.image.resize(m);
  std::vector<std::optional<Element>> theta(m);  // old arrow -> combination of new arrows
  for (int a = 0; a < m; ++a) lin.image[a] = element_of(Path::arrow(q, a));
  bool any_change = false;
  for (auto& [key, blk] : blocks) {
    if (blk.xs.empty() || blk.ys.empty()) continue;
    Mat c(static_cast<int>(blk.xs.size()), static_cast<int>(blk.ys.size()));
    for (size_t i = 0; i < blk.xs.size(); ++i)
      for (size_t j = 0; j < blk.ys.size(); ++j) {
        CyclicWord w = canonical({{0, blk.xs[i]}, {0, blk.ys[j]}});
        auto it = qp.potential.terms.find(w);
        if (it != qp.potential.terms.end()) c(static_cast<int>(i), static_cast<int>(j)) = it->second;
      }
    int r = rank(c);
    int need = static_cast<int>(std::min(blk.xs.size(), blk.ys.size()));
    if (r < need)
      throw DegeneratePotential("quadratic part between vertices " + std::to_string(key.first + 1) + " and " +
                                std::to_string(key.second + 1) + " has rank " + std::to_string(r) + " < " +
                                std::to_string(need) + "; reduced part would keep a 2-cycle");
    if (r == 0) continue;
    any_change = true;
    auto [rows, cols] = choose_pivots(c, blk.xs, blk.ys);
    int nx = c.rows(), ny = c.cols();
    Mat sub = c.rows_subset(rows).cols_subset(cols);
    // lambda: rows outside X' as combinations of pivot rows
    Mat lam(nx, r);
    for (int x = 0; x < nx; ++x) {
      if (contains(rows, x)) continue;
      auto sol = solve(sub.transpose(), c.rows_subset({x}).cols_subset(cols).transpose());
      if (!sol) throw StructuralError("internal: row not in span of pivot rows");
      for (int p = 0; p < r; ++p) lam(x, p) = (*sol)(p, 0);
    }
    // New arrow x~_p = x_p + sum_{x not pivot} lam[x][p] x ; y~_p = sum_y C[x_p][y] y.
    // Matrix Lx: new x (rows, indexed like xs) in terms of old x (cols).
    Mat lx = Mat::identity(nx);
    for (int p = 0; p < r; ++p)
      for (int x = 0; x < nx; ++x)
        if (!contains(rows, x)) lx(rows[p], x) = lam(x, p);
    Mat ly = Mat::identity(ny);
    for (int p = 0; p < r; ++p)
      for (int y = 0; y < ny; ++y) ly(cols[p], y) = c(rows[p], y);
    for (int p = 0; p < r; ++p) {
      alphas.push_back(blk.xs[rows[p]]);
      betas.push_back(blk.ys[cols[p]]);
    }
    auto fill = [&](const Mat& l, const std::vector<int>& ids) {
      auto inv = inverse(l);
      if (!inv) throw StructuralError("internal: singular change of arrows");
      int s = l.rows();
      for (int i = 0; i < s; ++i) {
        Element img, th;
        for (int j = 0; j < s; ++j) {
          add_to(img, Path::arrow(q, ids[j]), l(i, j));
          add_to(th, Path::arrow(q, ids[j]), (*inv)(i, j));
        }
        lin.image[ids[i]] = img;
        theta[ids[i]] = th;
      }
    };
    fill(lx, blk.xs);
    fill(ly, blk.ys);
  }

  Potential s = qp.potential;
  if (any_change) {
    s = substitute(qp.potential, theta, q, d, trunc);
    res.log.push_back(lin);
  }

  int rtot = static_cast<int>(alphas.size());
  std::vector<int> role(m, -1);  // index p for alpha_p (p) or beta_p (rtot + p)
  for (int p = 0; p < rtot; ++p) {
    role[alphas[p]] = p;
    role[betas[p]] = rtot + p;
  }
  std::set<CyclicWord> pair_words;
  for (int p = 0; p < rtot; ++p) pair_words.insert(canonical({{0, alphas[p]}, {0, betas[p]}}));

  int cap = 16 + 4 * trunc * (*std::max_element(d.begin(), d.end()) + 1);
  while (rtot > 0) {
    std::vector<Element> delta(m);
    bool coupled = false;
    for (const auto& [w, c] : s.terms) {
      if (pair_words.count(w)) continue;
      int ia = -1, ib = -1;
      for (int i = 0; i < word_length(w); ++i) {
        int rl = role[w[i].second];
        if (rl < 0) continue;
        if (rl < rtot && ia < 0) ia = i;
        if (rl >= rtot && ib < 0) ib = i;
      }
      if (ia >= 0) {
        // alpha_p * u_p : beta_p -> beta_p - u_p
        int p = role[w[ia].second];
        add_to(delta[betas[p]], cut_at(w, ia, q), c);
        coupled = true;
      } else if (ib >= 0) {
        int p = role[w[ib].second] - rtot;
        add_to(delta[alphas[p]], cut_at(w, ib, q), c);
        coupled = true;
      }
    }
    if (!coupled) break;
    if (++res.iterations > cap) {
      s.truncation_loss = true;
      break;
    }
    std::vector<std::optional<Element>> images(m);
    for (int a = 0; a < m; ++a) {
      if (delta[a].empty()) continue;
      Element img = element_of(Path::arrow(q, a));
      add_to(img, delta[a], -1);
      images[a] = img;
    }
    s = substitute(s, images, q, d, trunc);
    res.log.push_back(UnitriangularChange{delta});
  }
  for (int p = 0; p < rtot; ++p) {
    auto it = s.terms.find(canonical({{0, alphas[p]}, {0, betas[p]}}));
    if (it == s.terms.end() || it->second != 1) throw StructuralError("internal: quadratic pairing lost");
  }

  // Drop trivial arrows.
  DropArrows drop;
  std::vector<int> newid(m, -1);
  for (int a = 0; a < m; ++a)
    if (role[a] < 0) {
      newid[a] = static_cast<int>(drop.kept.size());
      drop.kept.push_back(a);
    }
  res.reduced.quiver.n = q.n;
  res.reduced.quiver.datum = q.datum;
  for (int a : drop.kept) res.reduced.quiver.arrows.push_back(q.arrows[a]);
  res.reduced.potential.trunc = trunc;
  res.reduced.potential.truncation_loss = s.truncation_loss;
  res.trivial.quiver.n = q.n;
  res.trivial.quiver.datum = q.datum;
  res.trivial.potential.trunc = trunc;
  std::vector<int> trivid(m, -1);
  for (int a = 0; a < m; ++a)
    if (role[a] >= 0) {
      trivid[a] = static_cast<int>(res.trivial.quiver.arrows.size());
      res.trivial.quiver.arrows.push_back(q.arrows[a]);
      res.trivial_arrows.push_back(a);
    }
  for (const auto& [w, c] : s.terms) {
    bool has_triv = false;
    for (const auto& [l, a] : w)
      if (role[a] >= 0) has_triv = true;
    CyclicWord nw;
    if (has_triv) {
      if (!pair_words.count(w)) throw StructuralError("internal: coupling survived reduction");
      for (const auto& [l, a] : w) nw.emplace_back(l, trivid[a]);
      res.trivial.potential.add(nw, c);
    } else {
      for (const auto& [l, a] : w) nw.emplace_back(l, newid[a]);
      res.reduced.potential.add(nw, c);
    }
  }
  if (rtot > 0) res.log.push_back(drop);
  return res;
}

MutationResult mutate_qp_full(const QP& qp, int k) {
  MutationResult r;
  r.pre = premutate(qp, k);
  r.split = split_reduce(r.pre.qp);
  r.qp = r.split.reduced;
  return r;
}

QP mutate_qp(const QP& qp, int k) { return mutate_qp_full(qp, k).qp; }

std::vector<CyclicWord> cyclic_words(const HQuiver& q, int maxLen) {
  std::set<CyclicWord> found;
  int m = static_cast<int>(q.arrows.size());
  std::vector<int> seq;
  // Depth-first over closed arrow walks, then all loop decorations.
  std::function<void()> dfs = [&]() {
    int len = static_cast<int>(seq.size());
    if (len >= 2 && q.arrows[seq.back()].tail == q.arrows[seq.front()].head) {
      std::vector<int> pw(len, 0);
      while (true) {
        CyclicWord w;
        for (int i = 0; i < len; ++i) w.emplace_back(pw[i], seq[i]);
        found.insert(canonical(w));
        int i = 0;
        while (i < len) {
          if (++pw[i] < q.datum.d[q.arrows[seq[i]].head]) break;
          pw[i] = 0;
          ++i;
        }
        if (i == len) break;
      }
    }
    if (len == maxLen) return;
    int v = q.arrows[seq.back()].tail;
    for (int a = 0; a < m; ++a)
      if (q.arrows[a].head == v) {
        seq.push_back(a);
        dfs();
        seq.pop_back();
      }
  };
  for (int a = 0; a < m; ++a) {
    seq = {a};
    dfs();
  }
  return {found.begin(), found.end()};
}

Potential random_potential(const HQuiver& q, int maxLen, int coeffBound, std::uint64_t seed, int trunc) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-coeffBound, coeffBound);
  Potential s;
  s.trunc = trunc;
  for (const auto& w : cyclic_words(q, maxLen)) s.add(w, dist(rng));
  return s;
}

QP normalize_arrow_order(const QP& qp) {
  int m = static_cast<int>(qp.quiver.arrows.size());
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  const auto& ar = qp.quiver.arrows;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::make_pair(ar[x].tail, ar[x].head) < std::make_pair(ar[y].tail, ar[y].head);
  });
  std::vector<int> newid(m);
  QP r;
  r.quiver.n = qp.quiver.n;
  r.quiver.datum = qp.quiver.datum;
  for (int i = 0; i < m; ++i) {
    newid[order[i]] = i;
    r.quiver.arrows.push_back(ar[order[i]]);
  }
  r.potential.trunc = qp.potential.trunc;
  r.potential.truncation_loss = qp.potential.truncation_loss;
  for (const auto& [w, c] : qp.potential.terms) {
    CyclicWord nw;
    for (const auto& [l, a] : w) nw.emplace_back(l, newid[a]);
    r.potential.add(nw, c);
  }
  return r;
}

}  // namespace hqp
