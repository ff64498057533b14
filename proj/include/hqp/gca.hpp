#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqp/poly.hpp"
#include "hqp/quiver.hpp"

namespace hqp {

// Coefficient semifield of a seed. TropZ: P = Trop(z) with y = 1.
// Principal: P = Trop(y, z) with initial y = generators. Universal: Q_sf(y, z).
enum class SemifieldMode { TropZ, Principal, Universal };
// Exponent sign inside the sum of the F-recursion. Positive reproduces
// F = 1 + y_k at the first step for d_k = 1; Printed uses -c and -b.
enum class FSign { Positive, Printed };

std::string mode_name(SemifieldMode m);
SemifieldMode parse_mode(const std::string& s);
std::string fsign_name(FSign s);
FSign parse_fsign(const std::string& s);

// Ring x1..xn, then y1..yn unless the mode is TropZ, then the z-symbols.
VarsPtr seed_ring(int n, const MutationDatum& datum, SemifieldMode mode);
// Ring y1..yn followed by the z-symbols.
VarsPtr yz_ring(int n, const MutationDatum& datum);

struct Seed {
  IntMat B;
  MutationDatum datum;
  SemifieldMode mode = SemifieldMode::TropZ;
  VarsPtr ring;
  std::vector<RatFunc> x;  // expressed in the initial cluster
  std::vector<RatFunc> y;  // semifield values embedded in the ring
  std::vector<int> path;   // mutation sequence from the initial seed (0-based vertices)

  int n() const { return static_cast<int>(B.size()); }
  bool same_values(const Seed& o) const { return B == o.B && x == o.x && y == o.y; }
};

Seed initial_seed(const IntMat& b, const MutationDatum& datum, SemifieldMode mode = SemifieldMode::TropZ);
IntMat mutate_exchange(const IntMat& b, const std::vector<int>& d, int k);
Seed mutate_seed(const Seed& s, int k);
Seed mutate_along(const Seed& s, const std::vector<int>& path);

// Semifield sum of values embedded in the ring.
RatFunc oplus(const Seed& s, const std::vector<RatFunc>& terms);
// The z_{k,s} as ring elements.
RatFunc z_value(const Seed& s, int k, int sidx);
RatFunc yhat(const Seed& s, int i);
// Checks the yhat mutation rule at k for every i.
bool yhat_mutation_check(const Seed& s, int k);

// g, c, B and F data at one vertex of the tree (columns indexed by l).
struct GFRecord {
  std::vector<int> path;
  IntMat B;  // B_t
  IntMat C;  // C[i][j] = c_{i,j;t}
  IntMat G;  // G[i][l] = g_{l;t}(i)
  std::vector<LaurentPoly> F;  // in yz_ring
  bool has_f = true;
};

GFRecord gf_initial(const IntMat& b0, const MutationDatum& datum, bool with_f = true);
GFRecord gf_step(const GFRecord& r, const IntMat& b0, const MutationDatum& datum, int k, FSign sign);
// Records for t0 and every prefix of the path.
std::vector<GFRecord> gf_recursion(const IntMat& b0, const MutationDatum& datum, const std::vector<int>& path,
                                   FSign sign = FSign::Positive, bool with_f = true);

// y^h = F|Trop(y,z)(y_i -> y_i^{-1} prod_{j != i} y_j^{d_j [-b_ji]_+}).
std::vector<int> h_vector(const LaurentPoly& f, const IntMat& b0, const std::vector<int>& d);

// x^g F(yhat, z) / F|_P(y, z) over the initial seed.
RatFunc separation(const Seed& s0, const std::vector<int>& g, const LaurentPoly& f);

struct LaurentViolation {
  std::vector<int> path;
  int l;
  std::string value;
  std::string reason;
};
// Every cluster variable along every prefix of the path, expanded in the
// initial cluster, must have a monomial x-denominator and integer
// coefficients in the z (and y) variables.
std::vector<LaurentViolation> laurent_check(const Seed& s0, const std::vector<int>& path);
bool is_laurent_integral(const RatFunc& f);

struct HRelation {
  bool ok = true;
  std::vector<std::string> failures;
  // Components where the g'-rule with [-b_ik]_+ in place of [b_ik]_+ fails.
  int printed_rule_mismatches = 0;
};
// Compares g, h and F of (B, t0) with those of (mu_k B, t1) at the end of the path.
HRelation h_relation_check(const IntMat& b0, const MutationDatum& datum, const std::vector<int>& path, int k,
                           FSign sign = FSign::Positive);

// Upper-bound membership: Laurent in the initial cluster and in every
// adjacent cluster. Returns the failing cluster (-1 = initial) or nullopt.
// Throws NotApplicable when B is not of full rank.
std::optional<int> upper_membership(const RatFunc& element, const Seed& s0);

// Structural checks on an F-polynomial: constant term 1 and a unique
// maximal monomial (for divisibility) with coefficient 1.
bool f_constant_term_one(const LaurentPoly& f);
bool f_unique_max_monomial(const LaurentPoly& f);
// k-th components of all g_{l;t} share a sign.
bool sign_coherent_rows(const IntMat& g);
long long det_int(const IntMat& m);

// C(M) = x^gcheck F_M(yhat, z) over a TropZ seed on the quiver of qp.
RatFunc cluster_character(const Seed& s0, const std::vector<int>& gcheck, const LaurentPoly& f);

struct ExchangeNode {
  int id;
  std::vector<int> path;
  int depth;
  IntMat B;
  std::vector<std::string> x;
  IntMat G;
};
struct ExchangeEdge {
  int from, to, k;
};
struct ExchangeGraph {
  std::vector<ExchangeNode> nodes;
  std::vector<ExchangeEdge> edges;
  bool partial = false;
  bool labeled = true;
};
ExchangeGraph explore(const Seed& s0, int max_depth, bool labeled, int node_budget = 2000);
std::string graph_dot(const ExchangeGraph& g);

}  // namespace hqp
