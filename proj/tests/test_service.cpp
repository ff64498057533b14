#include <atomic>
#include <filesystem>
#include <functional>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "hqp/library.hpp"
#include "hqp/session.hpp"

using namespace hqp;
namespace fs = std::filesystem;

namespace {

const char* kSeed = R"({"kind": "seed", "B": [[0, 1], [-1, 0]], "d": [2, 1]})";

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hqp_service_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

class Server : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fresh_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    store_ = std::make_unique<SessionStore>(dir_, ServiceOptions{});
    install_routes(server_, *store_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
    fs::remove_all(dir_);
  }

  std::string create(const std::string& body = kSeed) {
    auto r = client_->Post("/session", body, "application/json");
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, 200) << r->body;
    return parse_json(r->body).at("id").get<std::string>();
  }
  std::string get(const std::string& path, int status = 200) {
    auto r = client_->Get(path);
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, status) << path << ": " << r->body;
    return r->body;
  }
  std::string post(const std::string& path, const std::string& body, int status = 200) {
    auto r = client_->Post(path, body, "application/json");
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, status) << path << ": " << r->body;
    return r->body;
  }
  std::string file_of(const std::string& id) {
    std::ifstream in(dir_ / (id + ".json"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::unique_ptr<SessionStore> store_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace

TEST_F(Server, CreateReturnsId) {
  std::string id = create();
  EXPECT_FALSE(id.empty());
  EXPECT_TRUE(fs::exists(dir_ / (id + ".json")));
}

TEST_F(Server, MutateThenStateRoundTrip) {
  std::string id = create();
  std::string after = post("/session/" + id + "/mutate", R"({"k": 1})");
  EXPECT_EQ(get("/session/" + id + "/state"), after);
  Json st = parse_json(after);
  Seed s = seed_from_json(st.at("seed"));
  EXPECT_EQ(s.path, std::vector<int>{0});
  EXPECT_EQ(s.x[0].str(), mutate_seed(seed_from_json(parse_json(kSeed)), 0).x[0].str());
}

TEST_F(Server, UndoRestoresBytes) {
  std::string id = create();
  std::string before = get("/session/" + id + "/state");
  std::string file_before = file_of(id);
  post("/session/" + id + "/mutate", R"({"k": 2})");
  post("/session/" + id + "/mutate", R"({"k": 1})");
  post("/session/" + id + "/undo", "");
  EXPECT_EQ(post("/session/" + id + "/undo", ""), before);
  EXPECT_EQ(get("/session/" + id + "/state"), before);
  EXPECT_EQ(file_of(id), file_before);
  post("/session/" + id + "/undo", "", 409);
}

TEST_F(Server, PreviewIsSideEffectFree) {
  std::string id = create(dump(qp_to_json(three_cycle_qp({1, 1, 1}))));
  std::string before = get("/session/" + id + "/state");
  std::string file_before = file_of(id);
  std::string p1 = get("/session/" + id + "/preview?k=2");
  std::string p2 = get("/session/" + id + "/preview?k=2");
  EXPECT_EQ(p1, p2);
  EXPECT_EQ(get("/session/" + id + "/state"), before);
  EXPECT_EQ(file_of(id), file_before);
  Json p = parse_json(p1);
  // the new 1 -> 3 arrow cancels against 3 -> 1
  EXPECT_EQ(p.at("cancelled_two_cycles").get<int>(), 1);
  EXPECT_EQ(p.at("after").at("qp").at("arrows").size(), 2u);
}

TEST_F(Server, MutatingAQPKeepsSeedInStep) {
  std::string id = create(dump(qp_to_json(three_cycle_qp({1, 1, 1}))));
  Json st = parse_json(post("/session/" + id + "/mutate", R"({"k": 2})"));
  QP qp = qp_from_json(st.at("qp"));
  Seed s = seed_from_json(st.at("seed"));
  EXPECT_EQ(qp.quiver.b_matrix(), s.B);
}

TEST_F(Server, InvariantsAndGraph) {
  std::string id = create();
  post("/session/" + id + "/mutate", R"({"k": 1})");
  Json inv = parse_json(get("/session/" + id + "/invariants"));
  EXPECT_EQ(inv.at("F").at(0).get<std::string>(), "1 + y1*z1 + y1^2");
  EXPECT_EQ(inv.at("g").at(0), Json::parse("[-1, 2]"));
  Json g = parse_json(get("/session/" + id + "/graph?depth=2"));
  // labeled seeds: the start, one step at each vertex, and two alternating paths
  EXPECT_EQ(g.at("nodes").size(), 5u);
}

TEST_F(Server, PentagonWalk) {
  std::string id = create(R"({"B": [[0, 1], [-1, 0]], "d": [1, 1]})");
  Json init = parse_json(get("/session/" + id + "/state"));
  std::string last;
  for (int k : {1, 2, 1, 2, 1}) last = post("/session/" + id + "/mutate", "{\"k\": " + std::to_string(k) + "}");
  Json st = parse_json(last);
  EXPECT_EQ(parse_json(get("/session/" + id + "/invariants")).at("history").get<int>(), 5);
  auto x0 = st.at("seed").at("x"), i0 = init.at("seed").at("x");
  EXPECT_EQ(x0.at(0), i0.at(1));
  EXPECT_EQ(x0.at(1), i0.at(0));
}

TEST_F(Server, Errors) {
  std::string id = create();
  post("/session", "{not json", 400);
  post("/session", R"({"kind": "rep"})", 400);
  get("/session/nope/state", 404);
  post("/session/" + id + "/mutate", R"({"k": 3})", 400);
  post("/session/" + id + "/mutate", R"({"k": "1"})", 400);
  get("/session/" + id + "/preview", 400);
  get("/session/" + id + "/preview?k=x", 400);
  get("/session/" + id + "/graph?depth=99", 400);
  // a 2-cycle at k has no mutation
  std::string two = create(R"({"kind": "qp", "n": 2, "d": [1, 1], "arrows": [[1, 2], [2, 1]], "terms": []})");
  std::string before = get("/session/" + two + "/state");
  Json err = parse_json(post("/session/" + two + "/mutate", R"({"k": 1})", 422));
  EXPECT_FALSE(err.at("error").get<std::string>().empty());
  EXPECT_EQ(get("/session/" + two + "/state"), before);
}

TEST_F(Server, IndependentSessionsConcurrently) {
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create());
  std::vector<std::thread> ts;
  std::atomic<int> ok{0};
  for (const auto& id : ids)
    ts.emplace_back([&, id] {
      httplib::Client c("127.0.0.1", port_);
      for (int k : {1, 2, 1}) {
        auto r = c.Post("/session/" + id + "/mutate", "{\"k\": " + std::to_string(k) + "}", "application/json");
        if (r && r->status == 200) ++ok;
      }
    });
  for (auto& t : ts) t.join();
  EXPECT_EQ(ok.load(), 12);
  std::string first = get("/session/" + ids[0] + "/state");
  for (const auto& id : ids) {
    Json st = parse_json(get("/session/" + id + "/state"));
    EXPECT_EQ(st.at("seed"), parse_json(first).at("seed"));
  }
}

TEST(Service, SessionsSurviveRestart) {
  fs::path dir = fresh_dir("restart");
  std::string id, state;
  {
    SessionStore s(dir, ServiceOptions{});
    id = s.create(parse_json(kSeed)).at("id").get<std::string>();
    s.mutate(id, 1);
    state = dump(s.state(id));
  }
  SessionStore t(dir, ServiceOptions{});
  EXPECT_EQ(dump(t.state(id)), state);
  t.undo(id);
  EXPECT_TRUE(t.state(id).at("seed").at("path").empty());
  fs::remove_all(dir);
}

TEST(Service, SameSeedGivesSameIds) {
  fs::path a = fresh_dir("ids_a"), b = fresh_dir("ids_b");
  ServiceOptions o;
  o.seed = 42;
  SessionStore s(a, o), t(b, o);
  EXPECT_EQ(s.create(parse_json(kSeed)), t.create(parse_json(kSeed)));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Service, BusyPortFails) {
  httplib::Server blocker;
  int port = blocker.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  fs::path dir = fresh_dir("busy");
  EXPECT_EQ(serve("127.0.0.1", port, dir, ServiceOptions{}), 1);
  fs::remove_all(dir);
}
