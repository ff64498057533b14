#include "hqp/session.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <httplib.h>

#include "hqp/errors.hpp"

namespace hqp {

namespace fs = std::filesystem;

namespace {

IntMat initial_matrix(const Seed& s) {
  IntMat b = s.B;
  for (auto it = s.path.rbegin(); it != s.path.rend(); ++it) b = mutate_exchange(b, s.datum.d, *it);
  return b;
}

int parse_vertex(const Json& j, int n) {
  if (!j.is_number_integer()) throw ServiceError(400, "'k' must be an integer");
  int k = j.get<int>();
  if (k < 1 || k > n) throw ServiceError(400, "'k' out of range 1.." + std::to_string(n));
  return k;
}

bool valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') return false;
  return true;
}

Json x_strings(const Seed& s) {
  Json a = Json::array();
  for (const auto& f : s.x) a.push_back(f.str());
  return a;
}

struct Mutated {
  Seed seed;
  std::optional<QP> qp;
  int cancelled_pairs = 0;
};

Mutated apply(const Seed& s, const std::optional<QP>& qp, int k0) {
  Mutated m{mutate_seed(s, k0), std::nullopt, 0};
  if (qp) {
    MutationResult r = mutate_qp_full(*qp, k0);
    m.cancelled_pairs = static_cast<int>(r.split.trivial_arrows.size()) / 2;
    m.qp = r.qp;
  }
  return m;
}

}  // namespace

SessionStore::SessionStore(fs::path dir, ServiceOptions opts) : dir_(std::move(dir)), opts_(opts), rng_(opts.seed) {
  fs::create_directories(dir_);
  load_all();
}

Json SessionStore::state_of(const Session& s) const {
  Json j;
  j["id"] = s.id;
  j["seed"] = seed_to_json(s.seed);
  j["qp"] = s.qp ? qp_to_json(*s.qp) : Json();
  j["rng_seed"] = s.rng_seed;
  return j;
}

void SessionStore::restore(Session& s, const Json& state) const {
  s.seed = seed_from_json(state.at("seed"));
  if (state.contains("qp") && !state.at("qp").is_null())
    s.qp = qp_from_json(state.at("qp"));
  else
    s.qp.reset();
}

void SessionStore::persist(const Session& s) const {
  Json j;
  j["state"] = state_of(s);
  Json h = Json::array();
  for (const auto& [st, action] : s.history) h.push_back({{"state", st}, {"action", action}});
  j["history"] = h;
  fs::path tmp = dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    out << dump(j);
    if (!out) throw Error("io", "cannot write " + tmp.string());
  }
  fs::rename(tmp, dir_ / (s.id + ".json"));
}

void SessionStore::load_all() {
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      Json j = parse_json(ss.str());
      auto entry = std::make_shared<Entry>();
      Session& s = entry->s;
      const Json& st = j.at("state");
      s.id = st.at("id").get<std::string>();
      s.rng_seed = st.value("rng_seed", std::uint64_t{0});
      restore(s, st);
      for (const auto& h : j.at("history")) s.history.emplace_back(h.at("state"), h.at("action").get<std::string>());
      sessions_[s.id] = entry;
    } catch (const std::exception&) {
      // unreadable files are left alone
    }
  }
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "no session '" + id + "'");
  return it->second;
}

std::vector<std::string> SessionStore::ids() {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, e] : sessions_) out.push_back(id);
  return out;
}

Json SessionStore::create(const Json& body) {
  Session s;
  auto read_qp = [&](const Json& j) {
    QP qp = qp_from_json(j);
    if (!j.contains("trunc")) qp.potential.trunc = opts_.trunc_degree;
    return qp;
  };
  auto read_seed = [&](const Json& j) {
    Seed seed = seed_from_json(j);
    if (!j.contains("semifield") && opts_.semifield != seed.mode) {
      Json k = j;
      k["semifield"] = mode_name(opts_.semifield);
      seed = seed_from_json(k);
    }
    return seed;
  };
  if (!body.is_object()) throw ParseError("request body must be a JSON object");
  if (body.contains("seed")) {
    s.seed = read_seed(body.at("seed"));
    if (body.contains("qp") && !body.at("qp").is_null()) s.qp = read_qp(body.at("qp"));
  } else {
    std::string kind = kind_of(body);
    if (kind == "seed") {
      s.seed = read_seed(body);
    } else if (kind == "qp") {
      s.qp = read_qp(body);
    } else {
      throw ParseError("expected a seed or QP document");
    }
  }
  if (s.qp && !body.contains("seed")) {
    s.seed = initial_seed(s.qp->quiver.b_matrix(), s.qp->quiver.datum, opts_.semifield);
  }
  if (s.qp) {
    if (s.qp->quiver.b_matrix() != s.seed.B || !(s.qp->quiver.datum == s.seed.datum))
      throw PreconditionError("QP and seed disagree on B or on the mutation datum");
  }

  auto entry = std::make_shared<Entry>();
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::ostringstream id;
    do {
      id.str("");
      id << std::hex << rng_();
    } while (sessions_.count(id.str()));
    s.id = id.str();
    s.rng_seed = rng_();
    entry->s = std::move(s);
    sessions_[entry->s.id] = entry;
  }
  std::lock_guard<std::mutex> lock(entry->mu);
  persist(entry->s);
  return {{"id", entry->s.id}};
}

Json SessionStore::state(const std::string& id) {
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  return state_of(e->s);
}

Json SessionStore::mutate(const std::string& id, int k) {
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  Session& s = e->s;
  parse_vertex(Json(k), s.seed.n());
  Mutated m = apply(s.seed, s.qp, k - 1);
  s.history.emplace_back(state_of(s), "mutate " + std::to_string(k));
  s.seed = std::move(m.seed);
  s.qp = std::move(m.qp);
  persist(s);
  return state_of(s);
}

Json SessionStore::undo(const std::string& id) {
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  Session& s = e->s;
  if (s.history.empty()) throw ServiceError(409, "nothing to undo");
  restore(s, s.history.back().first);
  s.history.pop_back();
  persist(s);
  return state_of(s);
}

Json SessionStore::preview(const std::string& id, int k) {
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  const Session& s = e->s;
  parse_vertex(Json(k), s.seed.n());
  Mutated m = apply(s.seed, s.qp, k - 1);
  Json j;
  j["k"] = k;
  j["before"] = {{"B", int_mat_to_json(s.seed.B)}, {"x", x_strings(s.seed)}};
  j["after"] = {{"B", int_mat_to_json(m.seed.B)}, {"x", x_strings(m.seed)}};
  if (m.qp) {
    j["after"]["qp"] = qp_to_json(*m.qp);
    j["cancelled_two_cycles"] = m.cancelled_pairs;
  }
  return j;
}

Json SessionStore::invariants(const std::string& id) {
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  const Session& s = e->s;
  IntMat b0 = initial_matrix(s.seed);
  GFRecord r = gf_recursion(b0, s.seed.datum, s.seed.path, opts_.fsign).back();
  int n = s.seed.n();
  Json g = Json::array(), c = Json::array(), f = Json::array(), h = Json::array();
  for (int l = 0; l < n; ++l) {
    Json gl = Json::array(), cl = Json::array();
    for (int i = 0; i < n; ++i) {
      gl.push_back(r.G[i][l]);
      cl.push_back(r.C[i][l]);
    }
    g.push_back(gl);
    c.push_back(cl);
    if (r.has_f) {
      f.push_back(r.F[l].str());
      h.push_back(h_vector(r.F[l], b0, s.seed.datum.d));
    }
  }
  Json j;
  j["B0"] = int_mat_to_json(b0);
  j["B"] = int_mat_to_json(s.seed.B);
  j["d"] = s.seed.datum.d;
  Json path = Json::array();
  for (int k : s.seed.path) path.push_back(k + 1);
  j["path"] = path;
  j["x"] = x_strings(s.seed);
  j["g"] = g;
  j["c"] = c;
  j["F"] = f;
  j["h"] = h;
  j["f_sign"] = fsign_name(opts_.fsign);
  if (s.qp) {
    j["qp_reduced"] = is_reduced(*s.qp);
    j["potential_terms"] = s.qp->potential.terms.size();
  }
  j["history"] = s.history.size();
  return j;
}

Json SessionStore::graph(const std::string& id, int depth) {
  if (depth < 0 || depth > 12) throw ServiceError(400, "depth must be in 0..12");
  auto e = find(id);
  std::lock_guard<std::mutex> lock(e->mu);
  return graph_to_json(explore(e->s.seed, depth, true));
}

void install_routes(httplib::Server& server, SessionStore& store) {
  auto guard = [](httplib::Response& res, const std::function<Json()>& f) {
    try {
      res.set_content(dump(f()), "application/json");
    } catch (const ServiceError& e) {
      res.status = e.status;
      res.set_content(dump(Json{{"error", e.what()}}), "application/json");
    } catch (const ParseError& e) {
      res.status = 400;
      res.set_content(dump(Json{{"error", e.what()}, {"kind", e.kind()}}), "application/json");
    } catch (const Error& e) {
      res.status = 422;
      res.set_content(dump(Json{{"error", e.what()}, {"kind", e.kind()}}), "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(dump(Json{{"error", e.what()}}), "application/json");
    }
  };
  auto sid = [](const httplib::Request& req) {
    std::string id = req.path_params.at("id");
    if (!valid_id(id)) throw ServiceError(404, "no session '" + id + "'");
    return id;
  };
  auto int_param = [](const httplib::Request& req, const std::string& name) {
    if (!req.has_param(name)) throw ServiceError(400, "missing parameter '" + name + "'");
    std::string v = req.get_param_value(name);
    try {
      size_t pos = 0;
      int x = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw ServiceError(400, "parameter '" + name + "' must be an integer");
    }
  };

  server.Post("/session", [&, guard](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.create(parse_json(req.body)); });
  });
  server.Get("/session/:id/state", [&, guard, sid](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.state(sid(req)); });
  });
  server.Post("/session/:id/mutate", [&, guard, sid](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] {
      Json body = parse_json(req.body);
      if (!body.is_object() || !body.contains("k")) throw ServiceError(400, "body must be {\"k\": vertex}");
      const Json& k = body.at("k");
      if (!k.is_number_integer()) throw ServiceError(400, "'k' must be an integer");
      return store.mutate(sid(req), k.get<int>());
    });
  });
  server.Post("/session/:id/undo", [&, guard, sid](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.undo(sid(req)); });
  });
  server.Get("/session/:id/preview", [&, guard, sid, int_param](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.preview(sid(req), int_param(req, "k")); });
  });
  server.Get("/session/:id/invariants", [&, guard, sid](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.invariants(sid(req)); });
  });
  server.Get("/session/:id/graph", [&, guard, sid, int_param](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.graph(sid(req), req.has_param("depth") ? int_param(req, "depth") : 3); });
  });
}

int serve(const std::string& bind, int port, const fs::path& state_dir, const ServiceOptions& opts) {
  SessionStore store(state_dir, opts);
  httplib::Server server;
  // without SO_REUSEPORT a second instance on the same port fails to bind
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  install_routes(server, store);
  if (!server.bind_to_port(bind, port)) return 1;
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace hqp
