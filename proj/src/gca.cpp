#include "hqp/gca.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hqp/errors.hpp"
#include "hqp/linalg.hpp"

namespace hqp {

namespace {

int pos(int x) { return x > 0 ? x : 0; }

std::string xname(int i) { return "x" + std::to_string(i + 1); }
std::string yname(int i) { return "y" + std::to_string(i + 1); }

std::vector<int> cancel_push(std::vector<int> path, int k) {
  if (!path.empty() && path.back() == k)
    path.pop_back();
  else
    path.push_back(k);
  return path;
}

LaurentPoly mono_of(const RatFunc& f) {
  if (!f.is_laurent() || !f.num().is_monomial())
    throw StructuralError("tropical value is not a Laurent monomial: " + f.str());
  return f.num();
}

RatFunc var(const VarsPtr& v, const std::string& name) { return RatFunc(LaurentPoly::variable(v, name)); }

RatFunc constant(const VarsPtr& v, const Q& c) { return RatFunc::constant(v, c); }

void check_matrix(const IntMat& b, const MutationDatum& datum) {
  int n = static_cast<int>(b.size());
  for (const auto& r : b)
    if (static_cast<int>(r.size()) != n) throw StructuralError("exchange matrix is not square");
  if (datum.n() != n) throw StructuralError("mutation datum has wrong size");
  datum.validate();
}

// Value of a z-entry in ring v (numeric entries become constants).
LaurentPoly z_poly(const VarsPtr& v, const ZEntry& z) {
  return z.symbolic ? LaurentPoly::variable(v, z.name) : LaurentPoly::constant(v, z.value);
}

RatFunc exchange_sum(const VarsPtr& v, const MutationDatum& datum, int k, const RatFunc& u) {
  RatFunc s = constant(v, 0);
  RatFunc p = constant(v, 1);
  for (int t = 0; t <= datum.d[k]; ++t) {
    s = s + RatFunc(z_poly(v, datum.z[k][t])) * p;
    p = p * u;
  }
  return s;
}

}  // namespace

std::string mode_name(SemifieldMode m) {
  switch (m) {
    case SemifieldMode::TropZ:
      return "trop-z";
    case SemifieldMode::Principal:
      return "principal";
    case SemifieldMode::Universal:
      return "universal";
  }
  return "trop-z";
}

SemifieldMode parse_mode(const std::string& s) {
  if (s == "trop-z") return SemifieldMode::TropZ;
  if (s == "principal") return SemifieldMode::Principal;
  if (s == "universal") return SemifieldMode::Universal;
  throw ParseError("unknown semifield: " + s);
}

std::string fsign_name(FSign s) { return s == FSign::Positive ? "positive" : "printed"; }

FSign parse_fsign(const std::string& s) {
  if (s == "positive") return FSign::Positive;
  if (s == "printed") return FSign::Printed;
  throw ParseError("unknown F sign convention: " + s);
}

VarsPtr seed_ring(int n, const MutationDatum& datum, SemifieldMode mode) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(xname(i));
  if (mode != SemifieldMode::TropZ)
    for (int i = 0; i < n; ++i) names.push_back(yname(i));
  for (const auto& s : datum.symbols()) names.push_back(s);
  return Vars::make(names);
}

VarsPtr yz_ring(int n, const MutationDatum& datum) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(yname(i));
  for (const auto& s : datum.symbols()) names.push_back(s);
  return Vars::make(names);
}

Seed initial_seed(const IntMat& b, const MutationDatum& datum, SemifieldMode mode) {
  check_matrix(b, datum);
  Seed s;
  s.B = b;
  s.datum = datum;
  s.mode = mode;
  int n = s.n();
  s.ring = seed_ring(n, datum, mode);
  for (int i = 0; i < n; ++i) {
    s.x.push_back(var(s.ring, xname(i)));
    s.y.push_back(mode == SemifieldMode::TropZ ? constant(s.ring, 1) : var(s.ring, yname(i)));
  }
  return s;
}

IntMat mutate_exchange(const IntMat& b, const std::vector<int>& d, int k) { return mutate_matrix(b, d, k); }

RatFunc oplus(const Seed& s, const std::vector<RatFunc>& terms) {
  if (terms.empty()) throw StructuralError("empty semifield sum");
  if (s.mode == SemifieldMode::Universal) {
    RatFunc acc = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) acc = acc + terms[i];
    return acc;
  }
  // Tropical: componentwise minimum of exponents; numeric factors count as 1.
  Exp m = mono_of(terms[0]).terms()[0].first;
  for (size_t i = 1; i < terms.size(); ++i) {
    Exp e = mono_of(terms[i]).terms()[0].first;
    for (size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], e[j]);
  }
  return RatFunc(LaurentPoly::monomial(s.ring, m));
}

RatFunc z_value(const Seed& s, int k, int sidx) { return RatFunc(z_poly(s.ring, s.datum.z[k][sidx])); }

RatFunc yhat(const Seed& s, int i) {
  RatFunc r = s.y[i];
  for (int j = 0; j < s.n(); ++j)
    if (s.B[j][i] != 0) r = r * s.x[j].pow(s.B[j][i]);
  return r;
}

namespace {

RatFunc tropical_denominator(const Seed& s, int k) {
  std::vector<RatFunc> terms;
  RatFunc p = constant(s.ring, 1);
  for (int t = 0; t <= s.datum.d[k]; ++t) {
    terms.push_back(z_value(s, k, t) * p);
    p = p * s.y[k];
  }
  return oplus(s, terms);
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
  int n = s.n();
  if (k < 0 || k >= n) throw PreconditionError("mutation vertex out of range");
  int d = s.datum.d[k];
  Seed r = s;
  RatFunc den = tropical_denominator(s, k);
  // prod_j x_j^{d [-b_jk]_+} sum_s z_s yhat_k^s, expanded so that every
  // power of x_j is nonnegative
  RatFunc num = constant(s.ring, 0);
  RatFunc ys = constant(s.ring, 1);
  for (int t = 0; t <= d; ++t) {
    RatFunc term = z_value(s, k, t) * ys;
    for (int j = 0; j < n; ++j) {
      int e = t * s.B[j][k] + d * pos(-s.B[j][k]);
      if (e) term = term * s.x[j].pow(e);
    }
    num = num + term;
    ys = ys * s.y[k];
  }
  r.x[k] = num / (den * s.x[k]);
  r.y[k] = s.y[k].inverse();
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    int bki = s.B[k][i];
    RatFunc v = s.y[i];
    if (pos(bki)) v = v * s.y[k].pow(pos(bki) * d);
    if (bki != 0) v = v * den.pow(-bki);
    r.y[i] = v;
  }
  r.B = mutate_exchange(s.B, s.datum.d, k);
  r.path = cancel_push(s.path, k);
  return r;
}

Seed mutate_along(const Seed& s, const std::vector<int>& path) {
  Seed r = s;
  for (int k : path) r = mutate_seed(r, k);
  return r;
}

bool yhat_mutation_check(const Seed& s, int k) {
  Seed m = mutate_seed(s, k);
  RatFunc yk = yhat(s, k);
  RatFunc sum = exchange_sum(s.ring, s.datum, k, yk);
  int d = s.datum.d[k];
  for (int i = 0; i < s.n(); ++i) {
    RatFunc rhs = constant(s.ring, 1);
    if (i == k) {
      rhs = yk.inverse();
    } else {
      int bki = s.B[k][i];
      rhs = yhat(s, i);
      if (pos(bki)) rhs = rhs * yk.pow(pos(bki) * d);
      if (bki != 0) rhs = rhs * sum.pow(-bki);
    }
    if (yhat(m, i) != rhs) return false;
  }
  return true;
}

GFRecord gf_initial(const IntMat& b0, const MutationDatum& datum, bool with_f) {
  check_matrix(b0, datum);
  int n = static_cast<int>(b0.size());
  GFRecord r;
  r.B = b0;
  r.C.assign(n, std::vector<int>(n, 0));
  r.G = r.C;
  for (int i = 0; i < n; ++i) r.C[i][i] = r.G[i][i] = 1;
  r.has_f = with_f;
  if (with_f) {
    VarsPtr v = yz_ring(n, datum);
    r.F.assign(n, LaurentPoly::constant(v, 1));
  }
  return r;
}

GFRecord gf_step(const GFRecord& r, const IntMat& b0, const MutationDatum& datum, int k, FSign sign) {
  int n = static_cast<int>(r.B.size());
  if (k < 0 || k >= n) throw PreconditionError("mutation vertex out of range");
  int d = datum.d[k];
  const IntMat& b = r.B;
  const IntMat& c = r.C;
  GFRecord o = r;
  // g-vector
  for (int row = 0; row < n; ++row) {
    long long v = -r.G[row][k];
    for (int i = 0; i < n; ++i) {
      v += static_cast<long long>(pos(-b[i][k] * d)) * r.G[row][i];
      v -= static_cast<long long>(b0[row][i]) * pos(-c[i][k] * d);
    }
    o.G[row][k] = static_cast<int>(v);
  }
  // F-polynomial
  if (r.has_f) {
    VarsPtr v = r.F[0].vars();
    int sg = sign == FSign::Positive ? 1 : -1;
    // lead^d sum_t z_t u^t, one product per t; F_i powers stay polynomial
    // whenever the exponents allow it
    RatFunc sum = constant(v, 0);
    for (int t = 0; t <= d; ++t) {
      RatFunc term(z_poly(v, datum.z[k][t]));
      Exp ye(v->size(), 0);
      LaurentPoly fpos = LaurentPoly::constant(v, 1), fneg = LaurentPoly::constant(v, 1);
      for (int i = 0; i < n; ++i) {
        ye[v->index(yname(i))] = d * pos(-c[i][k]) + t * sg * c[i][k];
        int fe = d * pos(-b[i][k]) + t * sg * b[i][k];
        if (fe > 0) fpos *= r.F[i].pow(fe);
        if (fe < 0) fneg *= r.F[i].pow(-fe);
      }
      term = term * RatFunc(LaurentPoly::monomial(v, ye) * fpos, fneg);
      sum = sum + term;
    }
    RatFunc res = sum / RatFunc(r.F[k]);
    if (!res.is_laurent())
      throw NotApplicable("F-recursion with the " + fsign_name(sign) +
                          " convention leaves the polynomial ring: " + res.str());
    o.F[k] = res.num();
  }
  // c-vectors
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (j == k)
        o.C[i][j] = -c[i][k];
      else
        o.C[i][j] = c[i][j] + d * pos(b[k][j]) * c[i][k] + d * b[k][j] * pos(-c[i][k]);
    }
  o.B = mutate_exchange(b, datum.d, k);
  o.path = cancel_push(r.path, k);
  return o;
}

std::vector<GFRecord> gf_recursion(const IntMat& b0, const MutationDatum& datum, const std::vector<int>& path,
                                   FSign sign, bool with_f) {
  std::vector<GFRecord> out{gf_initial(b0, datum, with_f)};
  for (int k : path) out.push_back(gf_step(out.back(), b0, datum, k, sign));
  return out;
}

std::vector<int> h_vector(const LaurentPoly& f, const IntMat& b0, const std::vector<int>& d) {
  int n = static_cast<int>(b0.size());
  std::vector<int> yi(n);
  for (int i = 0; i < n; ++i) yi[i] = f.vars()->index(yname(i));
  std::vector<int> h;
  bool first = true;
  for (const auto& [e, coef] : f.terms()) {
    if (coef <= 0) throw PreconditionError("tropical evaluation needs nonnegative coefficients");
    std::vector<int> v(n, 0);
    for (int i = 0; i < n; ++i) {
      int ei = yi[i] >= 0 ? e[yi[i]] : 0;
      if (!ei) continue;
      v[i] -= ei;
      for (int j = 0; j < n; ++j)
        if (j != i) v[j] += ei * d[j] * pos(-b0[j][i]);
    }
    if (first) {
      h = v;
      first = false;
    } else {
      for (int i = 0; i < n; ++i) h[i] = std::min(h[i], v[i]);
    }
  }
  if (first) throw PreconditionError("h-vector of the zero polynomial");
  return h;
}

namespace {

// Values of the variables of an yz-ring polynomial, with y_i -> ys[i].
std::vector<RatFunc> yz_values(const LaurentPoly& f, const Seed& s, const std::vector<RatFunc>& ys) {
  std::vector<RatFunc> vals;
  for (const auto& name : f.vars()->names()) {
    if (name.size() > 1 && name[0] == 'y') {
      int i = std::stoi(name.substr(1)) - 1;
      if (i < 0 || i >= s.n()) throw StructuralError("variable " + name + " out of range");
      vals.push_back(ys[i]);
    } else {
      vals.push_back(var(s.ring, name));
    }
  }
  return vals;
}

RatFunc x_monomial(const Seed& s, const std::vector<int>& g) {
  RatFunc r = constant(s.ring, 1);
  for (int i = 0; i < s.n(); ++i)
    if (g[i]) r = r * s.x[i].pow(g[i]);
  return r;
}

}  // namespace

RatFunc separation(const Seed& s0, const std::vector<int>& g, const LaurentPoly& f) {
  if (!s0.path.empty()) throw PreconditionError("separation is taken over the initial seed");
  std::vector<RatFunc> yh;
  for (int i = 0; i < s0.n(); ++i) yh.push_back(yhat(s0, i));
  RatFunc top = f.substitute(yz_values(f, s0, yh));
  // F|_P: semifield evaluation term by term
  auto vals = yz_values(f, s0, s0.y);
  std::vector<RatFunc> terms;
  for (const auto& [e, c] : f.terms()) {
    if (c <= 0) throw PreconditionError("semifield evaluation needs nonnegative coefficients");
    RatFunc t = constant(s0.ring, s0.mode == SemifieldMode::Universal ? c : Q(1));
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * vals[i].pow(e[i]);
    terms.push_back(t);
  }
  RatFunc bottom = oplus(s0, terms);
  return x_monomial(s0, g) * top / bottom;
}

bool is_laurent_integral(const RatFunc& f) {
  const auto& names = f.vars()->names();
  const auto& den = f.den().terms();
  // the denominator may depend on x only through a common monomial
  for (const auto& [e, c] : den)
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i][0] == 'x' && e[i] != den[0].first[i]) return false;
  if (!f.is_laurent()) {
    for (const auto& [e, c] : den)
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i][0] == 'x' && e[i] != 0) return false;
    return true;
  }
  return f.num().integer_coefficients();
}

std::vector<LaurentViolation> laurent_check(const Seed& s0, const std::vector<int>& path) {
  std::vector<LaurentViolation> out;
  Seed s = s0;
  std::vector<int> prefix;
  for (int k : path) {
    s = mutate_seed(s, k);
    prefix.push_back(k);
    const RatFunc& v = s.x[k];
    if (!is_laurent_integral(v)) {
      std::string why = v.is_laurent() ? "non-integer coefficient" : "denominator is not a monomial in x";
      out.push_back({prefix, k, v.str(), why});
    }
  }
  return out;
}

HRelation h_relation_check(const IntMat& b0, const MutationDatum& datum, const std::vector<int>& path, int k,
                           FSign sign) {
  HRelation res;
  int n = static_cast<int>(b0.size());
  const auto& d = datum.d;
  GFRecord r = gf_recursion(b0, datum, path, sign).back();
  IntMat b1 = mutate_exchange(b0, d, k);
  std::vector<int> path1;
  if (!path.empty() && path[0] == k)
    path1.assign(path.begin() + 1, path.end());
  else {
    path1.push_back(k);
    path1.insert(path1.end(), path.begin(), path.end());
  }
  GFRecord r1 = gf_recursion(b1, datum, path1, sign).back();
  VarsPtr v = r.F[0].vars();
  // y'_i = y_i y_k^{d [b_ki]_+} S^{-b_ki} with S = sum_t z_t y_k^t, and
  // S(y'_k) = y_k^{-d} S by reciprocity. A polynomial in y' is therefore
  // N / S^m for a Laurent polynomial N.
  int yk = v->index(yname(k));
  LaurentPoly sk(v);
  for (int t = 0; t <= d[k]; ++t) sk += z_poly(v, datum.z[k][t]) * LaurentPoly::variable(v, yk, t);
  auto in_mutated = [&](const LaurentPoly& f, int& spow) {
    std::vector<std::pair<Exp, int>> parts;
    int lo = 0;
    for (const auto& [e, coef] : f.terms()) {
      Exp x = e;
      int sp = 0;
      x[yk] = -e[yk];
      for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        int ei = e[v->index(yname(i))];
        x[yk] += d[k] * pos(b0[k][i]) * ei;
        sp -= b0[k][i] * ei;
      }
      parts.push_back({x, sp});
      lo = std::min(lo, sp);
    }
    std::map<int, std::vector<LaurentPoly::Term>> by_power;
    size_t idx = 0;
    for (const auto& [e, coef] : f.terms()) {
      by_power[parts[idx].second - lo].emplace_back(parts[idx].first, coef);
      ++idx;
    }
    LaurentPoly out(v), skp = LaurentPoly::constant(v, 1);
    int at = 0;
    for (auto& [p, terms] : by_power) {
      for (; at < p; ++at) skp *= sk;
      out += LaurentPoly::from_terms(v, std::move(terms)) * skp;
    }
    spow = -lo;
    return out;
  };
  for (int l = 0; l < n; ++l) {
    std::vector<int> h = h_vector(r.F[l], b0, d);
    std::vector<int> h1 = h_vector(r1.F[l], b1, d);
    int gk = r.G[k][l];
    std::ostringstream tag;
    tag << "l=" << l + 1 << " k=" << k + 1;
    if (r1.G[k][l] != -gk) res.failures.push_back(tag.str() + ": g'(k) != -g(k)");
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      int want = r.G[i][l] + d[k] * pos(b0[i][k]) * gk - b0[i][k] * h[k];
      if (r1.G[i][l] != want)
        res.failures.push_back(tag.str() + ": g'(" + std::to_string(i + 1) + ") = " + std::to_string(r1.G[i][l]) +
                               ", rule gives " + std::to_string(want));
      if (r1.G[i][l] != r.G[i][l] + d[k] * pos(-b0[i][k]) * gk - b0[i][k] * h[k]) ++res.printed_rule_mismatches;
    }
    if (d[k] * gk != h[k] - h1[k])
      res.failures.push_back(tag.str() + ": d_k g(k) = " + std::to_string(d[k] * gk) + " but h(k) - h'(k) = " +
                             std::to_string(h[k] - h1[k]));
    // S^h F^d = (y_k^{-d} S)^{h'} (N / S^m)^d
    int m = 0;
    LaurentPoly nf = in_mutated(r1.F[l], m);
    int e = h[k] - h1[k] + m * d[k];
    // d-th roots of both sides when the exponents allow it
    int root = (h[k] % d[k] == 0 && h1[k] % d[k] == 0) ? d[k] : 1;
    e /= root;
    LaurentPoly lhs = r.F[l].pow(d[k] / root);
    LaurentPoly rhs = nf.pow(d[k] / root) * LaurentPoly::variable(v, yk, -d[k] / root * h1[k]);
    if (e > 0) lhs *= sk.pow(e);
    if (e < 0) rhs *= sk.pow(-e);
    if (lhs != rhs) res.failures.push_back(tag.str() + ": F transformation identity fails");
  }
  res.ok = res.failures.empty();
  return res;
}

std::optional<int> upper_membership(const RatFunc& element, const Seed& s0) {
  if (!s0.path.empty()) throw PreconditionError("upper bounds are taken at the initial seed");
  int n = s0.n();
  Mat bm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bm(i, j) = s0.B[i][j];
  if (rank(bm) != n) throw NotApplicable("exchange matrix is not of full rank");
  auto laurent = [&](const RatFunc& f) {
    const auto& names = f.vars()->names();
    const auto& den = f.den().terms();
    for (const auto& [e, c] : den)
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i][0] == 'x' && e[i] != den[0].first[i]) return false;
    return true;
  };
  if (!laurent(element)) return -1;
  for (int k = 0; k < n; ++k) {
    // x_k in terms of the adjacent cluster, whose k-th variable reuses the name x_k
    int d = s0.datum.d[k];
    RatFunc xk = s0.x[k];
    RatFunc yk = s0.y[k].inverse();
    RatFunc mono = constant(s0.ring, 1);
    RatFunc yh = yk;
    for (int j = 0; j < n; ++j) {
      if (pos(s0.B[j][k])) mono = mono * s0.x[j].pow(pos(s0.B[j][k]) * d);
      if (s0.B[j][k]) yh = yh * s0.x[j].pow(-s0.B[j][k]);
    }
    std::vector<RatFunc> terms;
    RatFunc p = constant(s0.ring, 1);
    for (int t = 0; t <= d; ++t) {
      terms.push_back(z_value(s0, k, t) * p);
      p = p * yk;
    }
    RatFunc val = mono * exchange_sum(s0.ring, s0.datum, k, yh) / (oplus(s0, terms) * xk);
    std::vector<RatFunc> vals;
    for (int i = 0; i < s0.ring->size(); ++i) vals.push_back(RatFunc(LaurentPoly::variable(s0.ring, i)));
    vals[s0.ring->index(xname(k))] = val;
    RatFunc sub = element.num().substitute(vals) / element.den().substitute(vals);
    if (!laurent(sub)) return k;
  }
  return std::nullopt;
}

bool f_constant_term_one(const LaurentPoly& f) {
  Exp zero(f.vars()->size(), 0);
  return f.coeff(zero) == 1;
}

bool f_unique_max_monomial(const LaurentPoly& f) {
  std::vector<int> yi;
  for (int i = 0; i < f.vars()->size(); ++i)
    if (f.vars()->names()[i][0] == 'y') yi.push_back(i);
  Exp mx(yi.size(), 0);
  for (const auto& [e, c] : f.terms())
    for (size_t j = 0; j < yi.size(); ++j) mx[j] = std::max(mx[j], e[yi[j]]);
  int hits = 0;
  Q coef = 0;
  for (const auto& [e, c] : f.terms()) {
    bool eq = true;
    for (size_t j = 0; j < yi.size(); ++j)
      if (e[yi[j]] != mx[j]) eq = false;
    if (eq) {
      ++hits;
      coef = c;
    }
  }
  return hits == 1 && coef == 1;
}

bool sign_coherent_rows(const IntMat& g) {
  for (const auto& row : g) {
    bool pos_ = false, neg = false;
    for (int x : row) {
      if (x > 0) pos_ = true;
      if (x < 0) neg = true;
    }
    if (pos_ && neg) return false;
  }
  return true;
}

long long det_int(const IntMat& m) {
  int n = static_cast<int>(m.size());
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
  Q d = det(a);
  return d.get_num().get_si();
}

RatFunc cluster_character(const Seed& s0, const std::vector<int>& gcheck, const LaurentPoly& f) {
  if (!s0.path.empty()) throw PreconditionError("cluster character is taken at the initial seed");
  std::vector<RatFunc> yh;
  for (int i = 0; i < s0.n(); ++i) yh.push_back(yhat(s0, i));
  return x_monomial(s0, gcheck) * f.substitute(yz_values(f, s0, yh));
}

namespace {

std::string seed_key(const Seed& s, const std::vector<int>& perm) {
  int n = s.n();
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << s.B[perm[i]][perm[j]] << ",";
    os << "|" << s.x[perm[i]].str() << "|" << s.y[perm[i]].str() << ";";
  }
  return os.str();
}

std::string canonical_key(const Seed& s, bool labeled) {
  std::vector<int> perm(s.n());
  std::iota(perm.begin(), perm.end(), 0);
  if (labeled) return seed_key(s, perm);
  std::string best;
  bool first = true;
  do {
    std::string k = seed_key(s, perm);
    if (first || k < best) best = k;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

ExchangeGraph explore(const Seed& s0, int max_depth, bool labeled, int node_budget) {
  ExchangeGraph g;
  g.labeled = labeled;
  struct Item {
    Seed s;
    GFRecord r;
  };
  std::vector<Item> items;
  std::map<std::string, int> index;
  std::set<std::pair<int, int>> seen_edges;
  auto add = [&](const Seed& s, const GFRecord& r, int depth) {
    std::string key = canonical_key(s, labeled);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (static_cast<int>(items.size()) >= node_budget) {
      g.partial = true;
      return -1;
    }
    int id = static_cast<int>(items.size());
    index[key] = id;
    items.push_back({s, r});
    ExchangeNode node;
    node.id = id;
    node.path = s.path;
    node.depth = depth;
    node.B = s.B;
    for (const auto& x : s.x) node.x.push_back(x.str());
    node.G = r.G;
    g.nodes.push_back(node);
    return id;
  };
  add(s0, gf_initial(s0.B, s0.datum, false), 0);
  for (size_t cur = 0; cur < items.size(); ++cur) {
    int depth = g.nodes[cur].depth;
    if (depth >= max_depth) continue;
    for (int k = 0; k < s0.n(); ++k) {
      Seed s = mutate_seed(items[cur].s, k);
      GFRecord r = gf_step(items[cur].r, s0.B, s0.datum, k, FSign::Positive);
      int id = add(s, r, depth + 1);
      if (id < 0) continue;
      int a = static_cast<int>(cur);
      auto e = std::make_pair(std::min(a, id), std::max(a, id));
      if (e.first != e.second && seen_edges.insert(e).second) g.edges.push_back({static_cast<int>(cur), id, k});
    }
  }
  return g;
}

std::string graph_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (const auto& n : g.nodes) {
    os << "  n" << n.id << " [label=\"";
    for (size_t i = 0; i < n.x.size(); ++i) os << (i ? "\\n" : "") << n.x[i];
    os << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.k + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hqp
