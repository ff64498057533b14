#include "hqp/library.hpp"

#include "hqp/errors.hpp"
#include "hqp/jacobian.hpp"

namespace hqp {

QP three_cycle_qp(const std::vector<int>& d) {
  QP qp;
  qp.quiver.n = 3;
  qp.quiver.datum = MutationDatum::standard(d);
  qp.quiver.arrows = {{0, 1}, {1, 2}, {2, 0}};
  // pairs (L, arrow) with t(a_i) = h(a_{i+1}): c b a
  qp.potential.add({{0, 2}, {0, 1}, {0, 0}}, 1);
  validate_qp(qp);
  return qp;
}

QP rank2_qp(const std::vector<int>& d, int mult) {
  QP qp;
  qp.quiver.n = 2;
  qp.quiver.datum = MutationDatum::standard(d);
  for (int i = 0; i < mult; ++i) qp.quiver.arrows.push_back({0, 1});
  validate_qp(qp);
  return qp;
}

namespace {

LibraryEntry make_entry(const std::string& name, const QP& qp, const std::vector<std::vector<int>>& gchecks) {
  LibraryEntry e{name, qp, {}};
  int n = qp.quiver.n;
  for (int k = 0; k < n; ++k) {
    e.reps.push_back({"neg" + std::to_string(k + 1), negative_simple(qp.quiver, k)});
    e.reps.push_back({"E" + std::to_string(k + 1), generalized_simple(qp.quiver, k)});
  }
  JacobianAlgebra j = finite_jacobian_algebra(qp);
  std::uint64_t seed = 11;
  for (const auto& gc : gchecks) {
    std::string label = "generic(";
    for (size_t i = 0; i < gc.size(); ++i) label += (i ? "," : "") + std::to_string(gc[i]);
    label += ")";
    try {
      e.reps.push_back({label, random_kernel_rep(qp, gc, 8, seed++, &j)});
    } catch (const GenericityFailure&) {
    }
  }
  return e;
}

}  // namespace

std::vector<LibraryEntry> example_library() {
  std::vector<LibraryEntry> lib;
  lib.push_back(make_entry("three-cycle", three_cycle_qp({1, 1, 1}),
                           {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}, {1, 0, -1}, {1, 1, -1}}));
  lib.push_back(make_entry("three-cycle-d211", three_cycle_qp({2, 1, 1}), {{1, -1, 0}, {-1, 0, 1}, {0, 1, -1}}));
  lib.push_back(make_entry("rank2-d21", rank2_qp({2, 1}), {{1, -1}, {-1, 1}, {1, -2}, {2, -1}}));
  lib.push_back(make_entry("rank2-d12", rank2_qp({1, 2}), {{1, -1}, {-1, 1}, {1, -2}, {2, -1}}));
  lib.push_back(make_entry("rank2-d22", rank2_qp({2, 2}), {{1, -1}, {-1, 1}, {1, -2}, {2, -1}}));
  return lib;
}

Seed bundled_rank3_seed() {
  IntMat b = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  return initial_seed(b, MutationDatum::standard({2, 1, 2}));
}

}  // namespace hqp
