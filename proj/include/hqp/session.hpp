#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hqp/errors.hpp"
#include "hqp/gca.hpp"
#include "hqp/io.hpp"
#include "hqp/pathalg.hpp"

namespace httplib {
class Server;
}

namespace hqp {

struct ServiceOptions {
  int trunc_degree = kDefaultTruncation;
  SemifieldMode semifield = SemifieldMode::TropZ;
  FSign fsign = FSign::Positive;
  std::uint64_t seed = 1;
};

struct Session {
  std::string id;
  Seed seed;
  std::optional<QP> qp;
  std::vector<std::pair<Json, std::string>> history;  // prior state and the action that left it
  std::uint64_t rng_seed = 0;
};

// Client errors carry an HTTP status.
struct ServiceError : Error {
  int status;
  ServiceError(int s, const std::string& m) : Error("service", m), status(s) {}
};

// Sessions kept in memory and mirrored to `dir` as one JSON file each.
class SessionStore {
 public:
  SessionStore(std::filesystem::path dir, ServiceOptions opts);

  // Body: a seed or QP document, or {"seed": ..., "qp": ...}.
  Json create(const Json& body);
  Json state(const std::string& id);
  Json mutate(const std::string& id, int k);  // k is 1-based
  Json undo(const std::string& id);
  Json preview(const std::string& id, int k);
  Json invariants(const std::string& id);
  Json graph(const std::string& id, int depth);

  std::vector<std::string> ids();

 private:
  struct Entry {
    std::mutex mu;
    Session s;
  };
  std::shared_ptr<Entry> find(const std::string& id);
  Json state_of(const Session& s) const;
  void restore(Session& s, const Json& state) const;
  void persist(const Session& s) const;
  void load_all();

  std::filesystem::path dir_;
  ServiceOptions opts_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mt19937_64 rng_;
};

void install_routes(httplib::Server& server, SessionStore& store);

// Blocks until the server stops. Returns 1 when the port cannot be bound.
int serve(const std::string& bind, int port, const std::filesystem::path& state_dir, const ServiceOptions& opts);

}  // namespace hqp
