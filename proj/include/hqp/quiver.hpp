#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hqp/rational.hpp"

namespace hqp {

using IntMat = std::vector<std::vector<int>>;

// One z_{i,s}: either an exact rational or a named indeterminate.
struct ZEntry {
  bool symbolic = false;
  Q value = 1;
  std::string name;
  bool operator==(const ZEntry& o) const {
    return symbolic == o.symbolic && (symbolic ? name == o.name : value == o.value);
  }
};

// Mutation degrees d_i and exchange coefficients z_{i,s}, 0 <= s <= d_i.
struct MutationDatum {
  std::vector<int> d;
  std::vector<std::vector<ZEntry>> z;

  int n() const { return static_cast<int>(d.size()); }
  // Symbolic z with names z{i} (one free symbol) or z{i}_{s}.
  static MutationDatum standard(const std::vector<int>& d);
  static std::string default_name(int vertex, int s, int d);  // vertex 0-based
  // Distinct symbol names in order of first appearance.
  std::vector<std::string> symbols() const;
  void validate() const;  // endpoints 1, reciprocity, d_i >= 1
  bool has_numeric_interior() const;
  bool operator==(const MutationDatum& o) const { return d == o.d && z == o.z; }
};

struct Arrow {
  int tail = 0, head = 0;  // 0-based
  bool operator==(const Arrow& o) const { return tail == o.tail && head == o.head; }
};

// Quiver with one implicit nilpotent loop of degree d_i at each vertex.
struct HQuiver {
  int n = 0;
  MutationDatum datum;
  std::vector<Arrow> arrows;  // arrow id = index

  const std::vector<int>& d() const { return datum.d; }
  IntMat b_matrix() const;
  // (i, j) with arrows both ways, 0-based.
  std::optional<std::pair<int, int>> two_cycle() const;
  bool is_two_acyclic() const { return !two_cycle().has_value(); }
  int count(int tail, int head) const;
  std::vector<int> arrows_into(int k) const;
  std::vector<int> arrows_out_of(int k) const;
  std::string dot() const;
};

IntMat mutate_matrix(const IntMat& b, const std::vector<int>& d, int k);
bool is_skew_symmetric(const IntMat& b);
// Quiver with [b_ij]_+ arrows j -> i, arrows sorted by (tail, head).
HQuiver quiver_from_matrix(const IntMat& b, const MutationDatum& datum);
// Three-step arrow-level mutation. Throws PreconditionError on a 2-cycle at k.
HQuiver mutate_quiver(const HQuiver& q, int k);

// Random 2-acyclic quiver with |b_ij| <= maxMult and d_i in [1, maxD].
HQuiver random_quiver(int n, int maxMult, int maxD, std::mt19937_64& rng);
IntMat random_skew(int n, int maxEntry, std::mt19937_64& rng);

std::string int_mat_str(const IntMat& m);

}  // namespace hqp
