#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hqp/errors.hpp"
#include "hqp/gca.hpp"
#include "hqp/io.hpp"
#include "hqp/pathalg.hpp"
#include "hqp/session.hpp"
#include "hqp/verify.hpp"

using namespace hqp;

namespace {

struct Globals {
  int trunc = kDefaultTruncation;
  std::string semifield;
  std::string fsign = "positive";
  std::uint64_t seed = 1;
  std::string bind = "127.0.0.1";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::vector<int> parse_path(const std::string& s, int n) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    size_t pos = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad path entry '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad path entry '" + tok + "'");
    if (k < 1 || k > n) throw PreconditionError("vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    out.push_back(k - 1);
  }
  return out;
}

Seed load_seed(const Json& j, const Globals& g) {
  if (!j.contains("semifield") && !g.semifield.empty()) {
    Json k = j;
    k["semifield"] = g.semifield;
    return seed_from_json(k);
  }
  return seed_from_json(j);
}

QP load_qp(const Json& j, const Globals& g) {
  QP qp = qp_from_json(j);
  if (!j.contains("trunc")) qp.potential.trunc = g.trunc;
  return qp;
}

int cmd_mutate(const Globals& g, const std::string& input, const std::string& path_text, const std::string& output) {
  Json j = parse_json(read_file(input));
  std::string kind = kind_of(j);
  Json out;
  if (kind == "seed") {
    Seed s = load_seed(j, g);
    out = seed_to_json(mutate_along(s, parse_path(path_text, s.n())));
  } else if (kind == "qp") {
    QP qp = load_qp(j, g);
    for (int k : parse_path(path_text, qp.quiver.n)) qp = mutate_qp(qp, k);
    out = qp_to_json(qp);
  } else {
    throw ParseError("input is neither a seed nor a QP");
  }
  write_output(output, dump(out));
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "unknown suite '" << suite << "'; expected one of:";
    for (const auto& n : names) std::cerr << ' ' << n;
    std::cerr << '\n';
    return 2;
  }
  SuiteReport r = run_suite(suite, g.seed);
  std::cout << dump(r.to_json());
  return r.pass() ? 0 : 1;
}

int cmd_explore(const Globals& g, const std::string& input, int depth, bool unlabeled, const std::string& format,
                const std::string& output) {
  Seed s = load_seed(parse_json(read_file(input)), g);
  ExchangeGraph graph = explore(s, depth, !unlabeled);
  write_output(output, format == "dot" ? graph_dot(graph) : dump(graph_to_json(graph)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutations of H-quivers with potentials and generalized cluster seeds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--trunc-degree", g.trunc, "Truncation degree for QPs without one")->check(CLI::PositiveNumber);
  app.add_option("--semifield", g.semifield, "Semifield for seeds without one")
      ->check(CLI::IsMember({"trop-z", "principal", "universal"}));
  app.add_option("--f-sign-convention", g.fsign, "Exponent sign of the F-recursion")
      ->check(CLI::IsMember({"positive", "printed"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--bind", g.bind, "Address the service listens on");

  std::string input, output, path_text, suite, state_dir = "sessions", format = "json";
  int port = 8080, depth = 3;
  bool unlabeled = false;

  auto* mutate = app.add_subcommand("mutate", "Mutate a seed or QP file along a path");
  mutate->add_option("input", input, "Seed or QP JSON")->required();
  mutate->add_option("--path", path_text, "Comma separated vertices, 1-based");
  mutate->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite)->required();

  auto* serve_cmd = app.add_subcommand("serve", "Run the session service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--state-dir", state_dir);

  auto* explore_cmd = app.add_subcommand("explore", "Breadth-first exchange graph of a seed");
  explore_cmd->add_option("input", input)->required();
  explore_cmd->add_option("--depth", depth)->check(CLI::Range(0, 12));
  explore_cmd->add_flag("--unlabeled", unlabeled, "Identify seeds up to permutation");
  explore_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  explore_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mutate) return cmd_mutate(g, input, path_text, output);
    if (*verify) return cmd_verify(g, suite);
    if (*explore_cmd) return cmd_explore(g, input, depth, unlabeled, format, output);
    if (*serve_cmd) {
      ServiceOptions opts;
      opts.trunc_degree = g.trunc;
      if (!g.semifield.empty()) opts.semifield = parse_mode(g.semifield);
      opts.fsign = parse_fsign(g.fsign);
      opts.seed = g.seed;
      std::cerr << "listening on " << g.bind << ':' << port << '\n';
      int rc = serve(g.bind, port, state_dir, opts);
      if (rc != 0) std::cerr << "cannot bind " << g.bind << ':' << port << '\n';
      return rc;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
