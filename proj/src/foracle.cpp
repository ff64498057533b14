#include "hqp/foracle.hpp"

#include <algorithm>
#include <set>

#include "hqp/errors.hpp"

namespace hqp {

namespace {

using I64 = std::int64_t;
using Vec = std::vector<I64>;
using Rows = std::vector<Vec>;  // a matrix or a list of row vectors

struct Fp {
  I64 p;
  I64 norm(I64 x) const { return ((x % p) + p) % p; }
  I64 mul(I64 a, I64 b) const { return (a * b) % p; }
  I64 inv(I64 a) const {
    I64 r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  I64 of(const Q& q) const {
    Z den = q.get_den() % p;
    if (den == 0)
      throw PreconditionError("prime " + std::to_string(p) + " divides a denominator of the input");
    Z num = q.get_num() % p;
    return mul(norm(num.get_si()), inv(den.get_si()));
  }
};

Rows reduce(const Fp& f, const Mat& m) {
  Rows r(m.rows(), Vec(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = f.of(m(i, j));
  return r;
}

// Row reduction in place; returns the pivot columns. Rows become the
// reduced echelon form with zero rows removed.
std::vector<int> rref_mod(const Fp& f, Rows& a, int cols) {
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    size_t s = r;
    while (s < a.size() && a[s][c] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    I64 iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (size_t t = 0; t < a.size(); ++t) {
      if (t == r || a[t][c] == 0) continue;
      I64 g = a[t][c];
      for (int j = 0; j < cols; ++j) a[t][j] = f.norm(a[t][j] - f.mul(g, a[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  return piv;
}

int rank_mod(const Fp& f, Rows a, int cols) { return static_cast<int>(rref_mod(f, a, cols).size()); }

// Basis of {x : a x = 0}.
Rows kernel_mod(const Fp& f, Rows a, int cols) {
  auto piv = rref_mod(f, a, cols);
  std::vector<int> is_piv(cols, -1);
  for (size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = static_cast<int>(r);
  Rows out;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c] >= 0) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.norm(-a[r][c]);
    out.push_back(v);
  }
  return out;
}

Vec apply(const Fp& f, const Rows& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    I64 s = 0;
    for (size_t j = 0; j < v.size(); ++j) s = (s + m[i][j] * v[j]) % f.p;
    out[i] = s;
  }
  return out;
}

struct Op {
  int from, to;
  Rows m;
};

struct Sub {
  std::vector<Rows> basis;  // per vertex, reduced echelon rows
};

std::vector<I64> key_of(const Sub& s) {
  std::vector<I64> k;
  for (const auto& b : s.basis) {
    k.push_back(-1 - static_cast<I64>(b.size()));
    for (const auto& r : b) k.insert(k.end(), r.begin(), r.end());
  }
  return k;
}

// Blocks of the operator x on (N cap ker e) / e(N), N spanned by rows of nb.
std::vector<int> jordan_mod(const Fp& f, const Rows& e, const Rows& x, const Rows& nb, int m) {
  // N cap ker e: coordinates c with e * (c^T nb) = 0
  int dn = static_cast<int>(nb.size());
  std::vector<int> blocks(dn + 1, 0);
  if (dn == 0) return blocks;
  Rows en;  // images e(n_i)
  for (const auto& v : nb) en.push_back(apply(f, e, v));
  Rows sys(m, Vec(dn, 0));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < dn; ++c) sys[r][c] = en[c][r];
  Rows w;
  for (const auto& c : kernel_mod(f, sys, dn)) {
    Vec v(m, 0);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < m; ++j) v[j] = (v[j] + c[i] * nb[i][j]) % f.p;
    w.push_back(v);
  }
  Rows u = en;
  int du = rank_mod(f, u, m);
  std::vector<int> r;  // r[j] = dim(x^j W + U) - dim U
  Rows cur = w;
  for (int j = 0; j <= dn; ++j) {
    Rows s = u;
    s.insert(s.end(), cur.begin(), cur.end());
    r.push_back(rank_mod(f, s, m) - du);
    Rows next;
    for (const auto& v : cur) next.push_back(apply(f, x, v));
    cur = next;
  }
  for (int s = 1; s <= dn; ++s) {
    int ge = r[s - 1] - r[s];
    int ge1 = s < dn ? r[s] - r[s + 1] : 0;
    blocks[s] = ge - ge1;
  }
  return blocks;
}

}  // namespace

const std::vector<int>& default_primes() {
  static const std::vector<int> p{2, 3, 5, 7, 11, 13};
  return p;
}

std::map<StratumKey, std::int64_t> count_subreps(const QP& qp, const DecoratedRep& m, int p) {
  const auto& q = qp.quiver;
  check_shapes(q, m);
  for (int k = 2; k * k <= p; ++k)
    if (p % k == 0) throw PreconditionError("point counts need a prime, got " + std::to_string(p));
  for (int k = 0; k < q.n; ++k)
    if (q.datum.d[k] > 2 && m.dims[k] > 0)
      throw PreconditionError("Jordan strata are only defined for d_k <= 2");
  Fp f{p};
  for (const auto& [w, c] : qp.potential.terms) f.of(c);
  int n = q.n;
  std::vector<Op> ops;
  for (int i = 0; i < n; ++i) ops.push_back({i, i, reduce(f, m.E[i])});
  for (size_t a = 0; a < q.arrows.size(); ++a)
    ops.push_back({q.arrows[a].tail, q.arrows[a].head, reduce(f, m.arrows[a])});
  std::vector<Rows> ek(n), xk(n);
  for (int k = 0; k < n; ++k) {
    if (q.datum.d[k] < 2 || m.dims[k] == 0) continue;
    ek[k] = reduce(f, m.E[k]);
    xk[k] = reduce(f, eval(eps_derivative(qp, k), q, m, k, k));
  }

  auto stratum = [&](const Sub& s) {
    StratumKey key;
    key.t.resize(n);
    for (int i = 0; i < n; ++i) {
      key.e.push_back(static_cast<int>(s.basis[i].size()));
      if (q.datum.d[i] >= 2 && m.dims[i] > 0) key.t[i] = jordan_mod(f, ek[i], xk[i], s.basis[i], m.dims[i]);
    }
    return key;
  };

  std::map<StratumKey, I64> out;
  Sub zero;
  zero.basis.assign(n, Rows{});
  std::map<std::vector<I64>, Sub> level{{key_of(zero), zero}};
  while (!level.empty()) {
    std::map<std::vector<I64>, Sub> next;
    for (const auto& [key, s] : level) {
      out[stratum(s)] += 1;
      // annihilators of each N_j
      std::vector<Rows> ann(n);
      for (int j = 0; j < n; ++j) {
        Rows b = s.basis[j];
        ann[j] = kernel_mod(f, b, m.dims[j]);
      }
      for (int i = 0; i < n; ++i) {
        int mi = m.dims[i];
        if (static_cast<int>(s.basis[i].size()) == mi) continue;
        Rows cons;
        for (const auto& op : ops) {
          if (op.from != i) continue;
          for (const auto& a : ann[op.to]) {
            Vec row(mi, 0);
            for (int c = 0; c < mi; ++c) {
              I64 acc = 0;
              for (int r = 0; r < m.dims[op.to]; ++r) acc = (acc + a[r] * op.m[r][c]) % p;
              row[c] = acc;
            }
            cons.push_back(row);
          }
        }
        Rows t = cons.empty() ? Rows{} : kernel_mod(f, cons, mi);
        if (cons.empty())
          for (int c = 0; c < mi; ++c) {
            Vec v(mi, 0);
            v[c] = 1;
            t.push_back(v);
          }
        // complement of N_i inside T_i
        Rows acc = s.basis[i];
        int r0 = static_cast<int>(acc.size());
        Rows comp;
        for (const auto& v : t) {
          Rows tr = acc;
          tr.push_back(v);
          if (rank_mod(f, tr, mi) > r0) {
            acc.push_back(v);
            ++r0;
            comp.push_back(v);
          }
        }
        int rc = static_cast<int>(comp.size());
        if (rc == 0) continue;
        // projective points of F_p^rc
        for (int lead = 0; lead < rc; ++lead) {
          std::vector<I64> c(rc, 0);
          c[lead] = 1;
          int free = rc - lead - 1;
          I64 total = 1;
          for (int z = 0; z < free; ++z) total *= p;
          for (I64 idx = 0; idx < total; ++idx) {
            I64 t2 = idx;
            for (int z = 0; z < free; ++z) {
              c[lead + 1 + z] = t2 % p;
              t2 /= p;
            }
            Vec v(mi, 0);
            for (int z = 0; z < rc; ++z)
              if (c[z])
                for (int x = 0; x < mi; ++x) v[x] = (v[x] + c[z] * comp[z][x]) % p;
            Sub ns = s;
            ns.basis[i].push_back(v);
            rref_mod(f, ns.basis[i], mi);
            auto nk = key_of(ns);
            if (!next.count(nk)) next.emplace(std::move(nk), std::move(ns));
          }
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

LaurentPoly f_chebyshev(const LaurentPoly& z, int l) {
  LaurentPoly a = LaurentPoly::constant(z.vars(), 1), b = z;
  if (l == 0) return a;
  for (int i = 1; i < l; ++i) {
    LaurentPoly c = z * b - a;
    a = b;
    b = c;
  }
  return b;
}

Z euler_from_counts(const std::vector<int>& primes, const std::vector<std::int64_t>& counts) {
  size_t n = primes.size();
  if (n < 2 || counts.size() != n) throw StructuralError("need at least two point counts");
  auto interp = [&](const Q& x) {
    Q s = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
      Q term = Q(static_cast<long>(counts[i]));
      for (size_t j = 0; j + 1 < n; ++j)
        if (j != i) term *= (x - primes[j]) / Q(primes[i] - primes[j]);
      s += term;
    }
    return s;
  };
  Q check = interp(Q(primes.back()));
  if (check != Q(static_cast<long>(counts.back())))
    throw NonPolynomialCount("point counts are not given by one polynomial of degree < " + std::to_string(n - 1) +
                             " (predicted " + to_string(check) + " points over F_" +
                             std::to_string(primes.back()) + ", counted " + std::to_string(counts.back()) + ")");
  Q v = interp(Q(1));
  if (!is_integer(v)) throw NonPolynomialCount("interpolated Euler characteristic is not an integer");
  return v.get_num();
}

bool good_prime(const QP& qp, const DecoratedRep& m, int p) {
  auto ok = [p](const Q& x) { return x.get_den() % p != 0; };
  for (const auto& [w, c] : qp.potential.terms)
    if (!ok(c)) return false;
  for (const auto* list : {&m.E, &m.arrows})
    for (const Mat& a : *list)
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
          if (!ok(a(i, j))) return false;
  // the reduction must keep the ranks of the arrow maps and of the powers of eps
  Fp f{p};
  std::vector<Mat> maps;
  for (const Mat& e : m.E)
    for (int j = 1; j < e.rows(); ++j) maps.push_back(e.pow(j));
  const auto& q = qp.quiver;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int t = q.arrows[a].tail, h = q.arrows[a].head;
    for (int i = 0; i < q.datum.d[h]; ++i)
      for (int j = 0; j < q.datum.d[t]; ++j) maps.push_back(m.E[h].pow(i) * m.arrows[a] * m.E[t].pow(j));
  }
  for (const Mat& a : maps)
    if (a.rows() > 0 && a.cols() > 0 && rank_mod(f, reduce(f, a), a.cols()) != rank(a)) return false;
  return true;
}

std::vector<int> oracle_primes(const QP& qp, const DecoratedRep& m, const std::vector<int>& requested) {
  std::vector<int> out;
  int next = 2;
  for (int p : requested) next = std::max(next, p + 1);
  auto is_prime = [](int x) {
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return x >= 2;
  };
  for (int p : requested) {
    if (good_prime(qp, m, p)) {
      out.push_back(p);
      continue;
    }
    while (!is_prime(next) || !good_prime(qp, m, next)) ++next;
    out.push_back(next++);
  }
  return out;
}

LaurentPoly f_polynomial_oracle(const QP& qp, const DecoratedRep& m, const VarsPtr& vars,
                                const std::vector<int>& requested) {
  const auto& q = qp.quiver;
  std::vector<int> primes = oracle_primes(qp, m, requested);
  std::map<StratumKey, std::vector<I64>> table;
  for (size_t i = 0; i < primes.size(); ++i)
    for (const auto& [k, c] : count_subreps(qp, m, primes[i])) {
      auto& v = table[k];
      v.resize(primes.size(), 0);
      v[i] = c;
    }
  std::vector<LaurentPoly> z(q.n);
  for (int k = 0; k < q.n; ++k) {
    if (q.datum.d[k] < 2) continue;
    const ZEntry& ze = q.datum.z[k][1];
    z[k] = ze.symbolic ? LaurentPoly::variable(vars, ze.name) : LaurentPoly::constant(vars, ze.value);
  }
  LaurentPoly out(vars);
  for (const auto& [key, counts] : table) {
    Z chi = euler_from_counts(primes, counts);
    if (chi == 0) continue;
    Exp e(vars->size(), 0);
    for (int k = 0; k < q.n; ++k) {
      int idx = vars->index("y" + std::to_string(k + 1));
      if (idx < 0) throw StructuralError("variable list lacks y" + std::to_string(k + 1));
      e[idx] = key.e[k];
    }
    LaurentPoly term = LaurentPoly::monomial(vars, e, Q(chi));
    for (int k = 0; k < q.n; ++k)
      for (size_t l = 1; l < key.t[k].size(); ++l)
        if (key.t[k][l]) term *= f_chebyshev(z[k], static_cast<int>(l)).pow(key.t[k][l]);
    out += term;
  }
  return out;
}

}  // namespace hqp
