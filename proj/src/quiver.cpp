#include "hqp/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hqp/errors.hpp"

namespace hqp {

std::string MutationDatum::default_name(int vertex, int s, int d) {
  int m = std::min(s, d - s);
  int distinct = d / 2;  // number of free symbols at this vertex
  if (distinct <= 1) return "z" + std::to_string(vertex + 1);
  return "z" + std::to_string(vertex + 1) + "_" + std::to_string(m);
}

MutationDatum MutationDatum::standard(const std::vector<int>& d) {
  MutationDatum md;
  md.d = d;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    std::vector<ZEntry> zi(d[i] + 1);
    for (int s = 1; s < d[i]; ++s) {
      zi[s].symbolic = true;
      zi[s].name = default_name(i, s, d[i]);
    }
    md.z.push_back(zi);
  }
  return md;
}

std::vector<std::string> MutationDatum::symbols() const {
  std::vector<std::string> out;
  for (const auto& zi : z)
    for (const auto& e : zi)
      if (e.symbolic && std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
  return out;
}

bool MutationDatum::has_numeric_interior() const {
  for (size_t i = 0; i < z.size(); ++i)
    for (int s = 1; s < d[i]; ++s)
      if (!z[i][s].symbolic) return true;
  return false;
}

void MutationDatum::validate() const {
  if (z.size() != d.size()) throw StructuralError("z must have one entry list per vertex");
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) throw PreconditionError("mutation degrees must be positive");
    if (static_cast<int>(z[i].size()) != d[i] + 1)
      throw StructuralError("z_" + std::to_string(i + 1) + " must have d+1 entries");
    for (int s : {0, d[i]})
      if (z[i][s].symbolic || z[i][s].value != 1)
        throw PreconditionError("z_{i,0} and z_{i,d_i} must equal 1");
    for (int s = 0; s <= d[i]; ++s) {
      if (!(z[i][s] == z[i][d[i] - s]))
        throw PreconditionError("reciprocity z_{i,s} = z_{i,d_i-s} fails at vertex " + std::to_string(i + 1));
      if (!z[i][s].symbolic && z[i][s].value <= 0 && s != 0)
        throw PreconditionError("numeric z entries must be positive");
    }
  }
}

IntMat HQuiver::b_matrix() const {
  IntMat b(n, std::vector<int>(n, 0));
  for (const auto& a : arrows) {
    b[a.head][a.tail] += 1;
    b[a.tail][a.head] -= 1;
  }
  return b;
}

int HQuiver::count(int tail, int head) const {
  int c = 0;
  for (const auto& a : arrows)
    if (a.tail == tail && a.head == head) ++c;
  return c;
}

std::optional<std::pair<int, int>> HQuiver::two_cycle() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (count(i, j) && count(j, i)) return std::make_pair(i, j);
  return std::nullopt;
}

std::vector<int> HQuiver::arrows_into(int k) const {
  std::vector<int> r;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].head == k) r.push_back(static_cast<int>(a));
  return r;
}

std::vector<int> HQuiver::arrows_out_of(int k) const {
  std::vector<int> r;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].tail == k) r.push_back(static_cast<int>(a));
  return r;
}

std::string HQuiver::dot() const {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int i = 0; i < n; ++i) {
    os << "  v" << i + 1 << " [label=\"" << i + 1 << "\"];\n";
    if (datum.d[i] > 1)
      os << "  v" << i + 1 << " -> v" << i + 1 << " [label=\"eps" << i + 1 << "^" << datum.d[i] << "\"];\n";
  }
  for (size_t a = 0; a < arrows.size(); ++a)
    os << "  v" << arrows[a].tail + 1 << " -> v" << arrows[a].head + 1 << " [label=\"a" << a + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

static int pos(int x) { return x > 0 ? x : 0; }

IntMat mutate_matrix(const IntMat& b, const std::vector<int>& d, int k) {
  int n = static_cast<int>(b.size());
  if (k < 0 || k >= n) throw PreconditionError("mutation vertex out of range");
  IntMat r = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        r[i][j] = -b[i][j];
      else
        r[i][j] = b[i][j] + d[k] * (pos(-b[i][k]) * b[k][j] + b[i][k] * pos(b[k][j]));
    }
  return r;
}

bool is_skew_symmetric(const IntMat& b) {
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

HQuiver quiver_from_matrix(const IntMat& b, const MutationDatum& datum) {
  if (!is_skew_symmetric(b)) throw PreconditionError("exchange matrix is not skew-symmetric");
  HQuiver q;
  q.n = static_cast<int>(b.size());
  q.datum = datum;
  for (int t = 0; t < q.n; ++t)
    for (int h = 0; h < q.n; ++h)
      for (int c = 0; c < pos(b[h][t]); ++c) q.arrows.push_back({t, h});
  return q;
}

HQuiver mutate_quiver(const HQuiver& q, int k) {
  if (k < 0 || k >= q.n) throw PreconditionError("mutation vertex out of range");
  for (int i = 0; i < q.n; ++i)
    if (i != k && q.count(i, k) && q.count(k, i))
      throw PreconditionError("2-cycle through vertex " + std::to_string(k + 1));
  HQuiver r;
  r.n = q.n;
  r.datum = q.datum;
  // Step 1: d_k composite arrows i -> j for each path i -> k -> j.
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows)
    if (a.tail != k && a.head != k) arrows.push_back(a);
  for (const auto& a : q.arrows) {
    if (a.head != k) continue;
    for (const auto& b : q.arrows) {
      if (b.tail != k) continue;
      for (int l = 0; l < q.datum.d[k]; ++l) arrows.push_back({a.tail, b.head});
    }
  }
  // Step 2: reverse arrows at k.
  for (const auto& a : q.arrows)
    if (a.tail == k || a.head == k) arrows.push_back({a.head, a.tail});
  // Step 3: cancel 2-cycles pairwise, scanning in lexicographic order.
  std::stable_sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::make_pair(x.tail, x.head) < std::make_pair(y.tail, y.head);
  });
  std::vector<bool> gone(arrows.size(), false);
  for (size_t x = 0; x < arrows.size(); ++x) {
    if (gone[x]) continue;
    for (size_t y = x + 1; y < arrows.size(); ++y) {
      if (gone[y]) continue;
      if (arrows[y].tail == arrows[x].head && arrows[y].head == arrows[x].tail) {
        gone[x] = gone[y] = true;
        break;
      }
    }
  }
  for (size_t x = 0; x < arrows.size(); ++x)
    if (!gone[x]) r.arrows.push_back(arrows[x]);
  return r;
}

IntMat random_skew(int n, int maxEntry, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-maxEntry, maxEntry);
  IntMat b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b[i][j] = dist(rng);
      b[j][i] = -b[i][j];
    }
  return b;
}

HQuiver random_quiver(int n, int maxMult, int maxD, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dd(1, maxD);
  std::vector<int> d(n);
  for (auto& x : d) x = dd(rng);
  return quiver_from_matrix(random_skew(n, maxMult, rng), MutationDatum::standard(d));
}

std::string int_mat_str(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hqp
