#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hqp/gca.hpp"
#include "hqp/pathalg.hpp"
#include "hqp/rep.hpp"

namespace hqp {

// a: 1 -> 2, b: 2 -> 3, c: 3 -> 1 with S = cba.
QP three_cycle_qp(const std::vector<int>& d);
// `mult` arrows 1 -> 2, zero potential.
QP rank2_qp(const std::vector<int>& d, int mult = 1);

struct LibraryEntry {
  std::string name;
  QP qp;
  std::vector<std::pair<std::string, DecoratedRep>> reps;
};

// QPs with a handful of representations each: negative simples, generalized
// simples and generic kernel representations for small gcheck-vectors
// (those whose generic draw succeeds with the fixed seed).
std::vector<LibraryEntry> example_library();

// Rank-3 seed used as the default input of the laurent suite.
Seed bundled_rank3_seed();

}  // namespace hqp
