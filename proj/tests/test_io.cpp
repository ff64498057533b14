#include <gtest/gtest.h>

#include "hqp/errors.hpp"
#include "hqp/io.hpp"
#include "hqp/library.hpp"
#include "hqp/verify.hpp"

using namespace hqp;

namespace {

template <class To, class From>
void expect_roundtrip(const Json& j, To to, From from) {
  std::string a = dump(j);
  std::string b = dump(to(from(parse_json(a))));
  EXPECT_EQ(a, b);
}

}  // namespace

TEST(Io, SeedRoundTrip) {
  for (auto mode : {SemifieldMode::TropZ, SemifieldMode::Principal, SemifieldMode::Universal}) {
    Seed s = bundled_rank3_seed();
    s = mutate_along(initial_seed(s.B, s.datum, mode), {0, 1});
    expect_roundtrip(seed_to_json(s), seed_to_json, seed_from_json);
    Seed back = seed_from_json(parse_json(dump(seed_to_json(s))));
    EXPECT_TRUE(back.same_values(s));
    EXPECT_EQ(back.path, s.path);
  }
}

TEST(Io, MinimalSeedFileMeansInitialSeed) {
  Json j = parse_json(R"({"B": [[0, 1], [-1, 0]], "d": [2, 1]})");
  Seed s = seed_from_json(j);
  EXPECT_TRUE(s.same_values(initial_seed({{0, 1}, {-1, 0}}, MutationDatum::standard({2, 1}))));
  EXPECT_TRUE(s.path.empty());
}

TEST(Io, NumericZ) {
  Json j = parse_json(R"({"kind": "seed", "B": [[0, 1], [-1, 0]], "d": [2, 1], "z": {"1": ["1", "5/2", "1"]}})");
  Seed s = seed_from_json(j);
  EXPECT_FALSE(s.datum.z[0][1].symbolic);
  EXPECT_EQ(s.datum.z[0][1].value, Q(5, 2));
  expect_roundtrip(seed_to_json(s), seed_to_json, seed_from_json);
}

TEST(Io, QPAndRepRoundTrip) {
  for (const auto& e : example_library()) {
    expect_roundtrip(qp_to_json(e.qp), qp_to_json, qp_from_json);
    expect_roundtrip(quiver_to_json(e.qp.quiver), quiver_to_json, quiver_from_json);
    for (const auto& [name, m] : e.reps) expect_roundtrip(rep_to_json(m), rep_to_json, rep_from_json);
    for (int k = 0; k < e.qp.quiver.n; ++k) expect_roundtrip(qp_to_json(mutate_qp(e.qp, k)), qp_to_json, qp_from_json);
  }
}

TEST(Io, GraphRoundTrip) {
  Seed s = bundled_rank3_seed();
  expect_roundtrip(graph_to_json(explore(s, 2, true)), graph_to_json, graph_from_json);
  expect_roundtrip(graph_to_json(explore(s, 2, false)), graph_to_json, graph_from_json);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_json("{\"B\": [[0, 1]"), ParseError);
  EXPECT_THROW(seed_from_json(parse_json(R"({"B": [[0, 1], [-1, 0]], "d": [2]})")), ParseError);
  EXPECT_THROW(seed_from_json(parse_json(R"({"B": [[0, 1], [-1, 0]], "path": [3]})")), ParseError);
  EXPECT_THROW(qp_from_json(parse_json(R"({"kind": "qp", "n": 2, "arrows": [[1, 5]]})")), Error);
  EXPECT_THROW(parse_json("[1, 2"), ParseError);
}

TEST(Io, KindDetection) {
  EXPECT_EQ(kind_of(seed_to_json(bundled_rank3_seed())), "seed");
  EXPECT_EQ(kind_of(qp_to_json(three_cycle_qp({1, 1, 1}))), "qp");
  EXPECT_EQ(kind_of(parse_json(R"({"B": [[0]]})")), "seed");
}

TEST(Io, RoundTripProperty) {
  PropertyResult r = check_roundtrip(example_library(), 3);
  EXPECT_TRUE(r.pass()) << r.to_json().dump();
}
