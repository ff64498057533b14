#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hqp/gca.hpp"
#include "hqp/io.hpp"
#include "hqp/library.hpp"

namespace hqp {

struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}
  std::string name;
  int checked = 0;
  int failed = 0;
  int excluded = 0;
  Json counterexamples = Json::array();  // at most a few payloads
  std::vector<std::string> log;
  bool pass() const { return failed == 0 && checked > 0; }
  void fail(const Json& payload);
  Json to_json() const;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool pass() const;
  Json to_json() const;
};

// Random 2-acyclic quivers: mutate_quiver agrees with mutate_matrix at every vertex.
PropertyResult check_matrix_quiver(int cases, std::uint64_t seed);
PropertyResult check_matrix_involution(int cases, std::uint64_t seed);
PropertyResult check_seed_involution(int cases, std::uint64_t seed);
PropertyResult check_qp_involution(const std::vector<LibraryEntry>& lib);
PropertyResult check_rep_involution(const std::vector<LibraryEntry>& lib);

// g, c, F and cluster variables with d = 1 against the classical computation.
PropertyResult check_classical(int cases, std::uint64_t seed);

// Rank 2 over all paths up to max_len, rank 3 over sampled paths.
PropertyResult check_laurent(int rank3_samples, int max_len, std::uint64_t seed);

// Constant term, maximal monomial, sign coherence and |det G| = 1 along paths.
PropertyResult check_fg_structure(int rank3_samples, int max_len, std::uint64_t seed, FSign sign = FSign::Positive);

// gcheck of the representation built from E_l^- equals g_{l;t} and its
// F (via the oracle) equals F_{l;t}.
PropertyResult check_interpretation(int max_len, int max_dim, std::uint64_t seed);

// F-mutation identity for library representations and their mutations.
PropertyResult check_fmutation(const std::vector<LibraryEntry>& lib, int max_dim);

// g, gcheck, gbeta and dimension rules for library representations.
PropertyResult check_g_rules(const std::vector<LibraryEntry>& lib);

// d_k g(k) = h(k) - h'(k), the g'-rule and the F transformation along paths.
PropertyResult check_h_relations(int rank3_samples, int max_len, std::uint64_t seed);

// export -> import -> export is byte-identical for every JSON format.
PropertyResult check_roundtrip(const std::vector<LibraryEntry>& lib, std::uint64_t seed);

const std::vector<std::string>& suite_names();
// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

// Random path in which no vertex repeats immediately.
std::vector<int> random_reduced_path(int n, int len, std::mt19937_64& rng);

}  // namespace hqp
