#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hqp/quiver.hpp"
#include "hqp/rational.hpp"

namespace hqp {

constexpr int kDefaultTruncation = 12;

// Open path eps^{l_0} a_0 eps^{l_1} a_1 ... a_{m-1} eps^{l_m}, composed right
// to left: a_{m-1} is applied first. head = h(a_0), tail = t(a_{m-1}).
struct Path {
  int head = 0, tail = 0;
  std::vector<int> arrows;
  std::vector<int> loops;  // arrows.size() + 1 entries

  static Path idempotent(int v, int power = 0) { return {v, v, {}, {power}}; }
  static Path arrow(const HQuiver& q, int a);
  int length() const { return static_cast<int>(arrows.size()); }
  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const {
    return head == o.head && tail == o.tail && arrows == o.arrows && loops == o.loops;
  }
  std::string str() const;
};

// Element of the truncated path algebra.
using Element = std::map<Path, Q>;

struct TruncCtx {
  const std::vector<int>* d = nullptr;
  int trunc = kDefaultTruncation;
  bool lost = false;  // set when a product exceeded the truncation degree
};

std::optional<Path> path_mul(const Path& p, const Path& q, const std::vector<int>& d);
void add_to(Element& e, const Path& p, const Q& c);
void add_to(Element& e, const Element& f, const Q& c = 1);
Element mul(const Element& x, const Element& y, TruncCtx& ctx);
Element element_of(const Path& p, const Q& c = 1);
std::string element_str(const Element& e);

// Cyclic word: pairs (L_i, a_i) meaning eps^{L_i} a_i, read cyclically; the
// loop power sits at h(a_i) and t(a_i) = h(a_{i+1}).
using CyclicWord = std::vector<std::pair<int, int>>;

// Minimal rotation of the pair sequence.
CyclicWord canonical(const CyclicWord& w);
// Closes a path with head == tail into a cyclic word; nullopt when the merged
// loop power vanishes or the path has no arrows.
std::optional<CyclicWord> close_path(const Path& p, const std::vector<int>& d);
// Open path obtained by cutting the cycle just before position `start`.
Path open_word(const CyclicWord& w, int start, const HQuiver& q);
inline int word_length(const CyclicWord& w) { return static_cast<int>(w.size()); }
std::string word_str(const CyclicWord& w);

struct Potential {
  std::map<CyclicWord, Q> terms;
  int trunc = kDefaultTruncation;
  bool truncation_loss = false;

  void add(const CyclicWord& w, const Q& c);  // canonicalizes, drops zeros
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Potential& o) const { return terms == o.terms; }
};

struct QP {
  HQuiver quiver;
  Potential potential;
};

// Validates arrow usage, compatibility and loop bounds of every word.
void validate_qp(const QP& qp);
bool is_reduced(const QP& qp);

Element cyclic_derivative(const QP& qp, int arrow);
Element eps_derivative(const QP& qp, int k);

// Result of the premutation at k. Arrows incident to k keep their ids with
// reversed direction; ids >= first_composite are [b eps^l a].
struct Composite {
  int a, b, l;  // a: i -> k, b: k -> j (old ids)
};
struct Premutation {
  QP qp;
  int k = 0;
  int first_composite = 0;
  std::vector<Composite> composites;
  std::vector<bool> reversed;  // old arrow ids incident to k
};
Premutation premutate(const QP& qp, int k);

// One change of arrows recorded during reduction.
struct LinearChange {
  // new arrow id -> combination of old arrows (same arrow set size)
  std::vector<Element> image;
};
struct UnitriangularChange {
  // phi(c) = c - delta[c]; empty element for untouched arrows
  std::vector<Element> delta;
};
struct DropArrows {
  std::vector<int> kept;  // new id -> old id
};
using ChangeStep = std::variant<LinearChange, UnitriangularChange, DropArrows>;

struct SplitResult {
  QP reduced;
  QP trivial;
  std::vector<int> trivial_arrows;  // ids after the linear change, before dropping
  std::vector<ChangeStep> log;
  int iterations = 0;
};

// Throws DegeneratePotential when the reduced part cannot be 2-acyclic.
SplitResult split_reduce(const QP& qp);

struct MutationResult {
  Premutation pre;
  SplitResult split;
  QP qp;
};
MutationResult mutate_qp_full(const QP& qp, int k);
QP mutate_qp(const QP& qp, int k);

// All canonical cyclic words of arrow-length in [2, maxLen], each loop power in [0, d-1].
std::vector<CyclicWord> cyclic_words(const HQuiver& q, int maxLen);
Potential random_potential(const HQuiver& q, int maxLen, int coeffBound, std::uint64_t seed,
                           int trunc = kDefaultTruncation);

// Apply an algebra map given on arrows (missing entries are identity) to a
// potential. `target` supplies the loop degrees of the image algebra.
Potential substitute(const Potential& s, const std::vector<std::optional<Element>>& images,
                     const HQuiver& source, const std::vector<int>& d, int trunc);

// Sort arrows stably by (tail, head) and relabel the potential accordingly.
QP normalize_arrow_order(const QP& qp);

}  // namespace hqp
