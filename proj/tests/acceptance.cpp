// One PASS/FAIL line per acceptance criterion. Sizes, seeds and time limits
// are fixed here; a criterion fails when any property fails, nothing was
// checked, or the time limit is exceeded.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hqp/verify.hpp"

using namespace hqp;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Criterion {
  std::string name;
  double limit_s;  // 0 means no limit
  std::function<std::vector<PropertyResult>()> run;
  std::function<bool(const std::vector<PropertyResult>&)> extra = nullptr;
};

}  // namespace

int main() {
  const std::vector<LibraryEntry> lib = example_library();
  std::vector<Criterion> criteria = {
      {"matrix/quiver agreement", 5, [] { return std::vector{check_matrix_quiver(200, kSeed)}; }},
      {"involutions", 30,
       [&] {
         return std::vector{check_matrix_involution(200, kSeed), check_seed_involution(200, kSeed),
                            check_qp_involution(lib), check_rep_involution(lib)};
       }},
      {"classical oracle", 60, [] { return std::vector{check_classical(50, kSeed)}; }},
      {"laurent phenomenon", 120, [] { return std::vector{check_laurent(100, 8, kSeed)}; }},
      {"F/g structure", 0, [] { return std::vector{check_fg_structure(100, 8, kSeed)}; }},
      {"interpretation", 300, [] { return std::vector{check_interpretation(4, 8, kSeed)}; }},
      {"F-mutation identity", 0, [&] { return std::vector{check_fmutation(lib, 8)}; },
       [](const std::vector<PropertyResult>& r) { return r[0].checked >= 10; }},
      {"g-vector mutation rules", 0, [&] { return std::vector{check_g_rules(lib)}; }},
      {"h-relations", 0, [] { return std::vector{check_h_relations(100, 8, kSeed)}; }},
      {"round-trip I/O", 0, [&] { return std::vector{check_roundtrip(lib, kSeed)}; }},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::vector<PropertyResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty();
    int checked = 0, failed = 0, excluded = 0;
    for (const auto& r : results) {
      ok = ok && r.pass();
      checked += r.checked;
      failed += r.failed;
      excluded += r.excluded;
    }
    if (ok && c.extra) ok = c.extra(results);
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    ok = ok && in_time;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << ": checked=" << checked
              << " failed=" << failed << " excluded=" << excluded << " time=" << timing << std::endl;
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    if (!in_time) std::cout << "    time limit exceeded\n";
    for (const auto& r : results) {
      for (const auto& line : r.log) std::cout << "    " << r.name << ": " << line << '\n';
      if (r.failed > 0) std::cout << "    " << r.name << " counterexamples: " << r.counterexamples.dump() << '\n';
    }
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
