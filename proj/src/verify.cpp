#include "hqp/verify.hpp"

#include <cmath>
#include <sstream>

#include "hqp/classical.hpp"
#include "hqp/errors.hpp"
#include "hqp/foracle.hpp"
#include "hqp/jacobian.hpp"

namespace hqp {

namespace {

constexpr int kMaxPayloads = 5;

int pos(int x) { return x > 0 ? x : 0; }

Json path_json(const std::vector<int>& p) {
  Json j = Json::array();
  for (int k : p) j.push_back(k + 1);
  return j;
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<int> column(const IntMat& m, int l) {
  std::vector<int> c;
  for (const auto& row : m) c.push_back(row[l]);
  return c;
}

std::vector<int> random_d(int n, int maxd, std::mt19937_64& rng) {
  std::vector<int> d(n);
  for (auto& x : d) x = 1 + static_cast<int>(rng() % maxd);
  return d;
}

// Sum_s z_{k,s} u^s in ring v.
RatFunc exchange_poly(const VarsPtr& v, const MutationDatum& m, int k, const RatFunc& u) {
  RatFunc s = RatFunc::constant(v, 0), p = RatFunc::constant(v, 1);
  for (int t = 0; t <= m.d[k]; ++t) {
    const ZEntry& z = m.z[k][t];
    LaurentPoly c = z.symbolic ? LaurentPoly::variable(v, z.name) : LaurentPoly::constant(v, z.value);
    s = s + RatFunc(c) * p;
    p = p * u;
  }
  return s;
}

// Mutated y-variables in the universal semifield, as values in ring v.
std::vector<RatFunc> mutated_y(const VarsPtr& v, const IntMat& b, const MutationDatum& m, int k) {
  int n = static_cast<int>(b.size());
  std::vector<RatFunc> vals;
  for (int i = 0; i < v->size(); ++i) vals.push_back(RatFunc::variable(v, i));
  auto yi = [&](int i) { return v->index("y" + std::to_string(i + 1)); };
  RatFunc yk = vals[yi(k)];
  RatFunc sk = exchange_poly(v, m, k, yk);
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    vals[yi(i)] = vals[yi(i)] * yk.pow(pos(b[k][i]) * m.d[k]) * sk.pow(-b[k][i]);
  }
  vals[yi(k)] = yk.inverse();
  return vals;
}

// Upper bound for the number of terms of the numerator of x'_k.
double term_estimate(const Seed& s, int k) {
  double total = 0;
  int d = s.datum.d[k];
  for (int t = 0; t <= d; ++t) {
    double prod = 1;
    for (int j = 0; j < s.n(); ++j) {
      int e = t * s.B[j][k] + d * pos(-s.B[j][k]);
      prod *= std::pow(static_cast<double>(s.x[j].num().size()), e);
    }
    total += prod;
  }
  return total;
}

constexpr double kTermBudget = 2000000;

// Longest prefix of the path whose cluster variables stay within the budget.
size_t tractable_prefix(const IntMat& b, const MutationDatum& m, const std::vector<int>& path) {
  Seed s = initial_seed(b, m);
  for (size_t i = 0; i < path.size(); ++i) {
    if (term_estimate(s, path[i]) > kTermBudget) return i;
    s = mutate_seed(s, path[i]);
  }
  return path.size();
}

struct Family {
  IntMat b;
  MutationDatum datum;
  std::vector<std::vector<int>> paths;
};

// Rank-2 families with every alternating path of length max_len, and
// sampled rank-3 paths (prefixes are covered by the callers).
std::vector<Family> path_families(int rank3_samples, int max_len, std::uint64_t seed, int max_b2,
                                  PropertyResult& r) {
  std::vector<Family> out;
  for (int b = 1; b <= max_b2; ++b)
    for (int d1 = 1; d1 <= 2; ++d1)
      for (int d2 = 1; d2 <= 2; ++d2) {
        // wild rank-2 patterns grow too fast for exact arithmetic
        if (b * b * d1 * d2 > 4) continue;
        Family f{{{0, b}, {-b, 0}}, MutationDatum::standard({d1, d2}), {}};
        for (int start = 0; start < 2; ++start) {
          std::vector<int> p;
          for (int i = 0; i < max_len; ++i) p.push_back((start + i) % 2);
          f.paths.push_back(p);
        }
        out.push_back(f);
      }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < rank3_samples; ++s) {
    IntMat b = random_skew(3, 1, rng);
    Family f{b, MutationDatum::standard(random_d(3, 2, rng)), {}};
    std::vector<int> p = random_reduced_path(3, 1 + static_cast<int>(rng() % max_len), rng);
    size_t keep = tractable_prefix(b, f.datum, p);
    if (keep < p.size()) {
      ++r.excluded;
      r.log.push_back("path " + path_json(p).dump() + " on B = " + int_mat_str(b) + ", d = " + vec_str(f.datum.d) +
                      " cut after " + std::to_string(keep) + " steps (term budget)");
      p.resize(keep);
    }
    f.paths.push_back(p);
    out.push_back(f);
  }
  return out;
}

Json family_payload(const Family& f, const std::vector<int>& path) {
  return Json{{"B", int_mat_to_json(f.b)}, {"d", f.datum.d}, {"path", path_json(path)}};
}

struct RepPair {
  std::string label;
  const LibraryEntry* entry;
  const DecoratedRep* rep;
  int k;
};

Json rep_payload(const LibraryEntry& e, const std::string& label, int k) {
  return Json{{"qp", e.name}, {"rep", label}, {"k", k + 1}};
}

}  // namespace

void PropertyResult::fail(const Json& payload) {
  ++failed;
  if (static_cast<int>(counterexamples.size()) < kMaxPayloads) counterexamples.push_back(payload);
}

Json PropertyResult::to_json() const {
  Json j{{"name", name}, {"pass", pass()}, {"checked", checked}, {"failed", failed}, {"excluded", excluded},
         {"counterexamples", counterexamples}};
  j["log"] = log;
  return j;
}

bool SuiteReport::pass() const {
  for (const auto& p : properties)
    if (!p.pass()) return false;
  return !properties.empty();
}

Json SuiteReport::to_json() const {
  Json props = Json::array();
  for (const auto& p : properties) props.push_back(p.to_json());
  return Json{{"suite", suite}, {"seed", seed}, {"pass", pass()}, {"properties", props}};
}

std::vector<int> random_reduced_path(int n, int len, std::mt19937_64& rng) {
  std::vector<int> p;
  while (static_cast<int>(p.size()) < len) {
    int k = static_cast<int>(rng() % n);
    if (!p.empty() && p.back() == k) continue;
    p.push_back(k);
  }
  return p;
}

PropertyResult check_matrix_quiver(int cases, std::uint64_t seed) {
  PropertyResult r{"matrix/quiver agreement"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 5);
    HQuiver q = random_quiver(n, 3, 3, rng);
    IntMat b = q.b_matrix();
    for (int k = 0; k < n; ++k) {
      ++r.checked;
      HQuiver mq = mutate_quiver(q, k);
      IntMat want = mutate_matrix(b, q.d(), k);
      if (mq.b_matrix() != want || !mq.is_two_acyclic() || mq.d() != q.d())
        r.fail(Json{{"quiver", quiver_to_json(q)}, {"k", k + 1}, {"expected", int_mat_to_json(want)},
                    {"got", int_mat_to_json(mq.b_matrix())}});
    }
  }
  return r;
}

PropertyResult check_matrix_involution(int cases, std::uint64_t seed) {
  PropertyResult r{"matrix mutation is an involution"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 5);
    IntMat b = random_skew(n, 3, rng);
    std::vector<int> d = random_d(n, 3, rng);
    int k = static_cast<int>(rng() % n);
    ++r.checked;
    IntMat once = mutate_matrix(b, d, k);
    if (mutate_matrix(once, d, k) != b || !is_skew_symmetric(once))
      r.fail(Json{{"B", int_mat_to_json(b)}, {"d", d}, {"k", k + 1}});
  }
  return r;
}

PropertyResult check_seed_involution(int cases, std::uint64_t seed) {
  PropertyResult r{"seed mutation is an involution"};
  std::mt19937_64 rng(seed);
  const SemifieldMode modes[] = {SemifieldMode::TropZ, SemifieldMode::Principal, SemifieldMode::Universal};
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMat b = random_skew(n, n == 2 ? 2 : 1, rng);
    MutationDatum m = MutationDatum::standard(random_d(n, 2, rng));
    SemifieldMode mode = modes[rng() % 3];
    // universal values are not reduced by a gcd, so they get shorter prefixes
    int prefix = static_cast<int>(rng() % (mode == SemifieldMode::Universal ? 2 : 3));
    Seed s = mutate_along(initial_seed(b, m, mode), random_reduced_path(n, prefix, rng));
    int k = static_cast<int>(rng() % n);
    ++r.checked;
    Seed back = mutate_seed(mutate_seed(s, k), k);
    if (!back.same_values(s) || back.path != s.path) r.fail(Json{{"seed", seed_to_json(s)}, {"k", k + 1}});
  }
  return r;
}

PropertyResult check_qp_involution(const std::vector<LibraryEntry>& lib) {
  PropertyResult r{"QP mutation is an involution on canonical forms"};
  for (const auto& e : lib)
    for (int k = 0; k < e.qp.quiver.n; ++k) {
      ++r.checked;
      QP once = mutate_qp(e.qp, k);
      QP twice = normalize_arrow_order(mutate_qp(once, k));
      QP orig = normalize_arrow_order(e.qp);
      bool counts = twice.quiver.b_matrix() == orig.quiver.b_matrix() &&
                    twice.quiver.arrows.size() == orig.quiver.arrows.size();
      bool potential = twice.potential == orig.potential;
      if (!counts || !potential)
        r.fail(Json{{"qp", e.name}, {"k", k + 1}, {"arrow_counts", counts}, {"potential", potential},
                    {"twice", qp_to_json(twice)}});
    }
  return r;
}

PropertyResult check_rep_involution(const std::vector<LibraryEntry>& lib) {
  PropertyResult r{"representation mutation is an involution on invariants"};
  for (const auto& e : lib)
    for (const auto& [label, m] : e.reps)
      for (int k = 0; k < e.qp.quiver.n; ++k) {
        ++r.checked;
        try {
          RepMutation once = mutate_rep(e.qp, m, k);
          RepMutation twice = mutate_rep(once.qpm.qp, once.rep, k);
          WeightVectors w0 = weight_vectors(e.qp, m), w2 = weight_vectors(twice.qpm.qp, twice.rep);
          if (twice.rep.dims != m.dims || twice.rep.v != m.v || w0.g != w2.g || w0.gcheck != w2.gcheck)
            r.fail(rep_payload(e, label, k));
        } catch (const Error& ex) {
          Json payload = rep_payload(e, label, k);
          payload["error"] = ex.what();
          r.fail(payload);
        }
      }
  return r;
}

PropertyResult check_classical(int cases, std::uint64_t seed) {
  PropertyResult r{"classical reduction"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 3);
    // entries bounded so that rank 4 stays tractable
    IntMat b = random_skew(n, n == 2 ? 2 : 1, rng);
    std::vector<int> path = random_reduced_path(n, 1 + static_cast<int>(rng() % 8), rng);
    MutationDatum m = MutationDatum::standard(std::vector<int>(n, 1));
    std::vector<GFRecord> recs = gf_recursion(b, m, path);
    Seed s = initial_seed(b, m, SemifieldMode::Principal);
    ClassicalState cs = classical_initial(b);
    bool ok = true;
    std::string what;
    for (size_t t = 0; t < path.size() && ok; ++t) {
      s = mutate_seed(s, path[t]);
      cs = classical_mutate(cs, path[t]);
      const GFRecord& rec = recs[t + 1];
      for (int l = 0; l < n && ok; ++l) {
        if (classical_g(cs, b, l) != column(rec.G, l)) ok = false, what = "g";
        else if (classical_c(cs, l) != column(rec.C, l)) ok = false, what = "c";
        else if (classical_f(cs, l).rebased(rec.F[l].vars()) != rec.F[l]) ok = false, what = "F";
        else if (s.x[l].str() != cs.x[l].str()) ok = false, what = "x";
      }
    }
    ++r.checked;
    if (!ok) r.fail(Json{{"B", int_mat_to_json(b)}, {"path", path_json(path)}, {"mismatch", what}});
  }
  return r;
}

PropertyResult check_laurent(int rank3_samples, int max_len, std::uint64_t seed) {
  PropertyResult r{"Laurent phenomenon"};
  for (const auto& f : path_families(rank3_samples, max_len, seed, 2, r)) {
    Seed s0 = initial_seed(f.b, f.datum);
    for (const auto& p : f.paths) {
      r.checked += static_cast<int>(p.size()) * s0.n();
      for (const auto& v : laurent_check(s0, p)) {
        Json payload = family_payload(f, v.path);
        payload["l"] = v.l + 1;
        payload["value"] = v.value;
        payload["reason"] = v.reason;
        r.fail(payload);
      }
    }
  }
  return r;
}

PropertyResult check_fg_structure(int rank3_samples, int max_len, std::uint64_t seed, FSign sign) {
  PropertyResult r{"F and g structure"};
  for (const auto& f : path_families(rank3_samples, max_len, seed, 2, r))
    for (const auto& p : f.paths) {
      std::vector<GFRecord> recs;
      try {
        recs = gf_recursion(f.b, f.datum, p, sign);
      } catch (const NotApplicable& ex) {
        ++r.excluded;
        r.log.push_back("excluded " + vec_str(p) + ": " + ex.what());
        continue;
      }
      for (const auto& rec : recs) {
        ++r.checked;
        std::string bad;
        for (const auto& fl : rec.F)
          if (!f_constant_term_one(fl) || !f_unique_max_monomial(fl)) bad = "F " + fl.str();
        if (!sign_coherent_rows(rec.G)) bad = "g not sign-coherent";
        long long det = det_int(rec.G);
        if (det != 1 && det != -1) bad = "det G = " + std::to_string(det);
        if (!bad.empty()) {
          Json payload = family_payload(f, rec.path);
          payload["problem"] = bad;
          r.fail(payload);
        }
      }
    }
  return r;
}

PropertyResult check_interpretation(int max_len, int max_dim, std::uint64_t seed) {
  PropertyResult r{"interpretation of g and F"};
  for (const auto& d : std::vector<std::vector<int>>{{2, 1}, {2, 2}}) {
    QP qp = rank2_qp(d);
    qp.potential = random_potential(qp.quiver, 4, 3, seed);
    IntMat b = qp.quiver.b_matrix();
    VarsPtr ring = yz_ring(2, qp.quiver.datum);
    for (int len = 0; len <= max_len; ++len)
      for (int start = 0; start < 2; ++start) {
        if (len == 0 && start == 1) continue;
        std::vector<int> path;
        for (int i = 0; i < len; ++i) path.push_back((start + i) % 2);
        GFRecord rec = gf_recursion(b, qp.quiver.datum, path).back();
        std::vector<QP> qps{qp};
        for (int k : path) qps.push_back(mutate_qp(qps.back(), k));
        for (int l = 0; l < 2; ++l) {
          DecoratedRep m = negative_simple(qps.back().quiver, l);
          QP cur = qps.back();
          for (int i = len - 1; i >= 0; --i) {
            RepMutation mu = mutate_rep(cur, m, path[i]);
            m = mu.rep;
            cur = mu.qpm.qp;
          }
          Json payload{{"d", d}, {"path", path_json(path)}, {"l", l + 1}};
          ++r.checked;
          std::vector<int> gc = weight_vectors(cur, m).gcheck;
          std::vector<int> g = column(rec.G, l);
          if (gc != g) {
            payload["gcheck"] = gc;
            payload["g"] = g;
            r.fail(payload);
            continue;
          }
          if (m.total_dim() > max_dim) {
            ++r.excluded;
            r.log.push_back("F not compared for " + payload.dump() + ": dimension " + std::to_string(m.total_dim()));
            continue;
          }
          try {
            LaurentPoly fm = f_polynomial_oracle(cur, m, ring);
            if (fm != rec.F[l]) {
              payload["F_rep"] = fm.str();
              payload["F"] = rec.F[l].str();
              r.fail(payload);
            }
          } catch (const NonPolynomialCount& ex) {
            ++r.excluded;
            r.log.push_back("excluded " + payload.dump() + ": " + ex.what());
          }
        }
      }
  }
  return r;
}

PropertyResult check_fmutation(const std::vector<LibraryEntry>& lib, int max_dim) {
  PropertyResult r{"F-mutation identity"};
  for (const auto& e : lib) {
    const MutationDatum& datum = e.qp.quiver.datum;
    int n = e.qp.quiver.n;
    VarsPtr ring = yz_ring(n, datum);
    IntMat b = e.qp.quiver.b_matrix();
    for (const auto& [label, m] : e.reps)
      for (int k = 0; k < n; ++k) {
        if (datum.d[k] > 2) continue;
        RepMutation mu = mutate_rep(e.qp, m, k);
        Json payload = rep_payload(e, label, k);
        if (m.total_dim() > max_dim || mu.rep.total_dim() > max_dim) {
          ++r.excluded;
          r.log.push_back("skipped " + payload.dump() + ": dimension above " + std::to_string(max_dim));
          continue;
        }
        LaurentPoly f, fbar;
        try {
          f = f_polynomial_oracle(e.qp, m, ring);
          fbar = f_polynomial_oracle(mu.qpm.qp, mu.rep, ring);
        } catch (const NonPolynomialCount& ex) {
          ++r.excluded;
          r.log.push_back("excluded " + payload.dump() + ": " + ex.what());
          continue;
        }
        ++r.checked;
        int cb = weight_vectors(e.qp, m).cbeta_plus[k];
        int cb1 = weight_vectors(mu.qpm.qp, mu.rep).cbeta_plus[k];
        std::vector<RatFunc> yp = mutated_y(ring, b, datum, k);
        RatFunc yk = RatFunc::variable(ring, ring->index("y" + std::to_string(k + 1)));
        RatFunc ykp = yp[ring->index("y" + std::to_string(k + 1))];
        RatFunc lhs = exchange_poly(ring, datum, k, yk).pow(-cb) * RatFunc(f);
        RatFunc rhs = exchange_poly(ring, datum, k, ykp).pow(-cb1) * fbar.substitute(yp);
        if (lhs != rhs) {
          payload["F"] = f.str();
          payload["F_mutated"] = fbar.str();
          r.fail(payload);
        }
      }
  }
  return r;
}

PropertyResult check_g_rules(const std::vector<LibraryEntry>& lib) {
  PropertyResult r{"g-vector mutation rules"};
  int intro_form_disagreements = 0;
  for (const auto& e : lib) {
    int n = e.qp.quiver.n;
    const auto& d = e.qp.quiver.d();
    IntMat b = e.qp.quiver.b_matrix();
    for (const auto& [label, m] : e.reps)
      for (int k = 0; k < n; ++k) {
        ++r.checked;
        RepMutation mu = mutate_rep(e.qp, m, k);
        WeightVectors w = weight_vectors(e.qp, m);
        WeightVectors w1 = weight_vectors(mu.qpm.qp, mu.rep);
        int dk = d[k];
        std::vector<std::string> bad;
        if (w1.g[k] != -w.g[k]) bad.push_back("g'(k)");
        if (w1.gcheck[k] != -w.gcheck[k]) bad.push_back("gcheck'(k)");
        for (int i = 0; i < n; ++i) {
          if (i == k) continue;
          int g1 = w.g[i] + dk * pos(-b[i][k]) * w.beta_minus[k] - dk * pos(b[i][k]) * w.beta_plus[k];
          int c1 = w.gcheck[i] + dk * pos(-b[k][i]) * w.cbeta_minus[k] - dk * pos(b[k][i]) * w.cbeta_plus[k];
          if (w1.g[i] != g1) bad.push_back("g'(" + std::to_string(i + 1) + ")");
          if (w1.gcheck[i] != c1) bad.push_back("gcheck'(" + std::to_string(i + 1) + ")");
          int g2 = w.g[i] + dk * pos(-b[i][k]) * pos(w.g[k]) - dk * pos(b[i][k]) * pos(-w.g[k]);
          int c2 = w.gcheck[i] + dk * pos(-b[k][i]) * pos(w.gcheck[k]) - dk * pos(b[k][i]) * pos(-w.gcheck[k]);
          if (g1 != g2 || c1 != c2) ++intro_form_disagreements;
        }
        if (w.g[k] != w1.beta_plus[k] - w.beta_plus[k]) bad.push_back("g(k) via beta");
        if (w.gcheck[k] != w1.cbeta_plus[k] - w.cbeta_plus[k]) bad.push_back("gcheck(k) via beta");
        int in_sum = 0, out_sum = 0;
        for (const auto& a : e.qp.quiver.arrows) {
          if (a.head == k) in_sum += m.dims[a.tail];
          if (a.tail == k) out_sum += m.dims[a.head];
        }
        int dim1 = dk * in_sum - m.dims[k] + dk * w.beta_plus[k] + dk * w.cbeta_minus[k];
        int dim2 = dk * out_sum - m.dims[k] + dk * w.beta_minus[k] + dk * w.cbeta_plus[k];
        if (mu.rep.dims[k] != dim1 || mu.rep.dims[k] != dim2) bad.push_back("dimension formula");
        if (!bad.empty()) {
          Json payload = rep_payload(e, label, k);
          payload["failed_rules"] = bad;
          r.fail(payload);
        }
      }
  }
  r.log.push_back("rules stated with [+-g(k)]_+ disagree with the beta form in " +
                  std::to_string(intro_form_disagreements) + " components");
  return r;
}

PropertyResult check_h_relations(int rank3_samples, int max_len, std::uint64_t seed) {
  PropertyResult r{"h-vector relations"};
  int printed = 0;
  for (const auto& f : path_families(rank3_samples, max_len, seed, 2, r))
    for (const auto& p : f.paths)
      for (size_t len = 0; len <= p.size(); ++len) {
        std::vector<int> prefix(p.begin(), p.begin() + len);
        for (int k = 0; k < static_cast<int>(f.b.size()); ++k) {
          ++r.checked;
          HRelation h = h_relation_check(f.b, f.datum, prefix, k);
          printed += h.printed_rule_mismatches;
          if (!h.ok) {
            Json payload = family_payload(f, prefix);
            payload["k"] = k + 1;
            payload["failures"] = h.failures;
            r.fail(payload);
          }
        }
      }
  r.log.push_back("g'-rule with [-b_ik]_+ in place of [b_ik]_+ mismatches: " + std::to_string(printed));
  return r;
}

PropertyResult check_roundtrip(const std::vector<LibraryEntry>& lib, std::uint64_t seed) {
  PropertyResult r{"round-trip I/O"};
  auto same = [&](const std::string& what, const Json& j, auto&& reparse) {
    ++r.checked;
    std::string first = dump(j);
    std::string second;
    try {
      second = dump(reparse(parse_json(first)));
    } catch (const Error& ex) {
      r.fail(Json{{"format", what}, {"error", ex.what()}});
      return;
    }
    if (first != second) r.fail(Json{{"format", what}, {"first", first}, {"second", second}});
  };
  for (const auto& e : lib) {
    same("quiver", quiver_to_json(e.qp.quiver), [](const Json& j) { return quiver_to_json(quiver_from_json(j)); });
    same("qp", qp_to_json(e.qp), [](const Json& j) { return qp_to_json(qp_from_json(j)); });
    for (int k = 0; k < e.qp.quiver.n; ++k) {
      QP mq = mutate_qp(e.qp, k);
      same("qp", qp_to_json(mq), [](const Json& j) { return qp_to_json(qp_from_json(j)); });
    }
    for (const auto& [label, m] : e.reps) {
      same("rep", rep_to_json(m), [](const Json& j) { return rep_to_json(rep_from_json(j)); });
      RepMutation mu = mutate_rep(e.qp, m, 0);
      same("rep", rep_to_json(mu.rep), [](const Json& j) { return rep_to_json(rep_from_json(j)); });
    }
  }
  std::mt19937_64 rng(seed);
  const SemifieldMode modes[] = {SemifieldMode::TropZ, SemifieldMode::Principal, SemifieldMode::Universal};
  for (int c = 0; c < 12; ++c) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMat b = random_skew(n, 1, rng);
    SemifieldMode mode = modes[c % 3];
    Seed s = initial_seed(b, MutationDatum::standard(random_d(n, 2, rng)), mode);
    int len = static_cast<int>(rng() % (mode == SemifieldMode::Universal ? 2 : 4));
    s = mutate_along(s, random_reduced_path(n, len, rng));
    same("seed", seed_to_json(s), [](const Json& j) { return seed_to_json(seed_from_json(j)); });
    ExchangeGraph g = explore(initial_seed(b, s.datum), 2, c % 2 == 0);
    same("graph", graph_to_json(g), [](const Json& j) { return graph_to_json(graph_from_json(j)); });
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"involutions", "laurent",  "signs",    "interpretation",
                                              "fmutation",   "oracle",   "roundtrip"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport rep{name, seed, {}};
  if (name == "involutions") {
    auto lib = example_library();
    rep.properties = {check_matrix_quiver(200, seed), check_matrix_involution(200, seed),
                      check_seed_involution(200, seed), check_qp_involution(lib), check_rep_involution(lib)};
  } else if (name == "laurent") {
    Seed s = bundled_rank3_seed();
    PropertyResult p{"Laurent phenomenon (bundled rank-3 seed)"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10; ++i) {
      std::vector<int> path = random_reduced_path(3, 6, rng);
      p.checked += 18;
      for (const auto& v : laurent_check(s, path))
        p.fail(Json{{"path", path_json(v.path)}, {"l", v.l + 1}, {"reason", v.reason}});
    }
    rep.properties = {p, check_laurent(20, 6, seed)};
  } else if (name == "signs") {
    auto lib = example_library();
    rep.properties = {check_fg_structure(20, 6, seed), check_g_rules(lib), check_h_relations(10, 5, seed)};
  } else if (name == "interpretation") {
    rep.properties = {check_interpretation(4, 8, seed)};
  } else if (name == "fmutation") {
    rep.properties = {check_fmutation(example_library(), 8)};
  } else if (name == "oracle") {
    rep.properties = {check_classical(50, seed)};
  } else if (name == "roundtrip") {
    rep.properties = {check_roundtrip(example_library(), seed)};
  } else {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace hqp
