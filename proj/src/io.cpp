#include "hqp/io.hpp"

#include "hqp/errors.hpp"

namespace hqp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer list");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(as_int(e));
  return out;
}

Q as_rational(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

bool is_identifier(const std::string& s) { return !s.empty() && std::isalpha(static_cast<unsigned char>(s[0])); }

}  // namespace

Json int_mat_to_json(const IntMat& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

IntMat int_mat_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer matrix");
  IntMat m;
  for (const auto& row : j) m.push_back(int_list(row));
  for (const auto& row : m)
    if (row.size() != m.size()) throw ParseError("exchange matrix must be square");
  return m;
}

Json datum_to_json(const MutationDatum& m) {
  Json z = Json::object();
  for (int i = 0; i < m.n(); ++i) {
    Json zi = Json::array();
    for (const auto& e : m.z[i]) zi.push_back(e.symbolic ? e.name : to_string(e.value));
    z[std::to_string(i + 1)] = zi;
  }
  return Json{{"d", m.d}, {"z", z}};
}

MutationDatum datum_from_json(const Json& j) {
  MutationDatum m;
  m.d = int_list(field(j, "d"));
  if (!j.contains("z")) {
    m = MutationDatum::standard(m.d);
  } else {
    const Json& z = j.at("z");
    if (!z.is_object()) throw ParseError("'z' must be an object keyed by vertex");
    for (int i = 0; i < m.n(); ++i) {
      std::string key = std::to_string(i + 1);
      if (!z.contains(key)) {
        m.z.push_back(MutationDatum::standard(m.d).z[i]);
        continue;
      }
      std::vector<ZEntry> zi;
      for (const auto& e : z.at(key)) {
        ZEntry ze;
        if (e.is_string() && is_identifier(e.get<std::string>())) {
          ze.symbolic = true;
          ze.name = e.get<std::string>();
        } else {
          ze.value = as_rational(e);
        }
        zi.push_back(ze);
      }
      m.z.push_back(zi);
    }
  }
  m.validate();
  return m;
}

Json quiver_to_json(const HQuiver& q) {
  Json j = datum_to_json(q.datum);
  j["kind"] = "quiver";
  j["n"] = q.n;
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({a.tail + 1, a.head + 1});
  j["arrows"] = arrows;
  return j;
}

HQuiver quiver_from_json(const Json& j) {
  HQuiver q;
  q.n = as_int(field(j, "n"));
  q.datum = datum_from_json(j);
  if (q.datum.n() != q.n) throw ParseError("'d' must have n entries");
  for (const auto& a : field(j, "arrows")) {
    auto ends = int_list(a);
    if (ends.size() != 2) throw ParseError("arrows are [tail, head] pairs");
    if (ends[0] < 1 || ends[0] > q.n || ends[1] < 1 || ends[1] > q.n) throw ParseError("arrow endpoint out of range");
    if (ends[0] == ends[1]) throw ParseError("loops other than eps are not allowed");
    q.arrows.push_back({ends[0] - 1, ends[1] - 1});
  }
  return q;
}

Json qp_to_json(const QP& qp) {
  Json j = quiver_to_json(qp.quiver);
  Json terms = Json::array();
  for (const auto& [w, c] : qp.potential.terms) {
    Json word = Json::array();
    for (const auto& [l, a] : w) word.push_back({l, a + 1});
    terms.push_back({{"word", word}, {"coeff", to_string(c)}});
  }
  j["kind"] = "qp";
  j["terms"] = terms;
  j["trunc"] = qp.potential.trunc;
  return j;
}

QP qp_from_json(const Json& j) {
  QP qp;
  qp.quiver = quiver_from_json(j);
  if (j.contains("trunc")) qp.potential.trunc = as_int(j.at("trunc"));
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      CyclicWord w;
      for (const auto& p : field(t, "word")) {
        auto la = int_list(p);
        if (la.size() != 2) throw ParseError("word letters are [loop power, arrow id] pairs");
        if (la[1] < 1 || la[1] > static_cast<int>(qp.quiver.arrows.size())) throw ParseError("arrow id out of range");
        w.push_back({la[0], la[1] - 1});
      }
      qp.potential.add(w, as_rational(field(t, "coeff")));
    }
  }
  validate_qp(qp);
  return qp;
}

Json mat_to_json(const Mat& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j.push_back(row);
  }
  return j;
}

Mat mat_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw ParseError("matrix has the wrong number of rows");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw ParseError("matrix has the wrong number of columns");
    for (int c = 0; c < cols; ++c) m(r, c) = as_rational(j[r][c]);
  }
  return m;
}

Json rep_to_json(const DecoratedRep& m) {
  Json j;
  j["kind"] = "rep";
  j["dims"] = m.dims;
  Json e = Json::array();
  for (const auto& x : m.E) e.push_back(mat_to_json(x));
  j["E"] = e;
  Json a = Json::array();
  for (const auto& x : m.arrows) {
    a.push_back({{"rows", x.rows()}, {"cols", x.cols()}, {"entries", mat_to_json(x)}});
  }
  j["arrows"] = a;
  j["v"] = m.v;
  return j;
}

DecoratedRep rep_from_json(const Json& j) {
  DecoratedRep m;
  m.dims = int_list(field(j, "dims"));
  for (int d : m.dims)
    if (d < 0) throw ParseError("negative dimension");
  const Json& e = field(j, "E");
  if (!e.is_array() || e.size() != m.dims.size()) throw ParseError("'E' must have one matrix per vertex");
  for (size_t i = 0; i < m.dims.size(); ++i) m.E.push_back(mat_from_json(e[i], m.dims[i], m.dims[i]));
  for (const auto& a : field(j, "arrows")) {
    int r = as_int(field(a, "rows")), c = as_int(field(a, "cols"));
    m.arrows.push_back(mat_from_json(field(a, "entries"), r, c));
  }
  m.v = j.contains("v") ? int_list(j.at("v")) : std::vector<int>(m.dims.size(), 0);
  if (m.v.size() != m.dims.size()) throw ParseError("'v' must have one entry per vertex");
  return m;
}

Json ratfunc_to_json(const RatFunc& f) { return Json{{"num", f.num().str()}, {"den", f.den().str()}}; }

RatFunc ratfunc_from_json(const VarsPtr& v, const Json& j) {
  if (j.is_string()) return RatFunc(LaurentPoly::parse(v, j.get<std::string>()));
  const Json& num = field(j, "num");
  const Json& den = field(j, "den");
  if (!num.is_string() || !den.is_string()) throw ParseError("num and den must be strings");
  LaurentPoly d = LaurentPoly::parse(v, den.get<std::string>());
  if (d.is_zero()) throw ParseError("zero denominator");
  return RatFunc(LaurentPoly::parse(v, num.get<std::string>()), d);
}

Json seed_to_json(const Seed& s) {
  Json j = datum_to_json(s.datum);
  j["kind"] = "seed";
  j["n"] = s.n();
  j["B"] = int_mat_to_json(s.B);
  j["semifield"] = mode_name(s.mode);
  Json x = Json::array(), y = Json::array();
  for (const auto& f : s.x) x.push_back(ratfunc_to_json(f));
  for (const auto& f : s.y) y.push_back(ratfunc_to_json(f));
  j["x"] = x;
  j["y"] = y;
  Json path = Json::array();
  for (int k : s.path) path.push_back(k + 1);
  j["path"] = path;
  return j;
}

// A seed file may give only n, B, d (and z); missing values mean the initial seed.
Seed seed_from_json(const Json& j) {
  IntMat b = int_mat_from_json(field(j, "B"));
  MutationDatum m = j.contains("d") ? datum_from_json(j) : MutationDatum::standard(std::vector<int>(b.size(), 1));
  if (m.n() != static_cast<int>(b.size())) throw ParseError("'d' and 'B' disagree on the rank");
  if (j.contains("n") && as_int(j.at("n")) != m.n()) throw ParseError("'n' disagrees with 'B'");
  SemifieldMode mode = SemifieldMode::TropZ;
  if (j.contains("semifield")) {
    if (!j.at("semifield").is_string()) throw ParseError("'semifield' must be a string");
    mode = parse_mode(j.at("semifield").get<std::string>());
  }
  Seed s = initial_seed(b, m, mode);
  if (j.contains("x")) {
    const Json& x = j.at("x");
    if (!x.is_array() || static_cast<int>(x.size()) != m.n()) throw ParseError("'x' must have n entries");
    for (int i = 0; i < m.n(); ++i) s.x[i] = ratfunc_from_json(s.ring, x[i]);
  }
  if (j.contains("y")) {
    const Json& y = j.at("y");
    if (!y.is_array() || static_cast<int>(y.size()) != m.n()) throw ParseError("'y' must have n entries");
    for (int i = 0; i < m.n(); ++i) s.y[i] = ratfunc_from_json(s.ring, y[i]);
  }
  if (j.contains("path")) {
    s.path.clear();
    for (int k : int_list(j.at("path"))) {
      if (k < 1 || k > m.n()) throw ParseError("path entry out of range");
      s.path.push_back(k - 1);
    }
  }
  return s;
}

Json graph_to_json(const ExchangeGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json path = Json::array();
    for (int k : n.path) path.push_back(k + 1);
    nodes.push_back({{"id", n.id},
                     {"B", int_mat_to_json(n.B)},
                     {"x", n.x},
                     {"g", int_mat_to_json(n.G)},
                     {"depth", n.depth},
                     {"path", path}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"k", e.k + 1}});
  return Json{{"kind", "graph"}, {"nodes", nodes}, {"edges", edges}, {"partial", g.partial}, {"labeled", g.labeled}};
}

ExchangeGraph graph_from_json(const Json& j) {
  ExchangeGraph g;
  g.partial = field(j, "partial").get<bool>();
  g.labeled = field(j, "labeled").get<bool>();
  for (const auto& n : field(j, "nodes")) {
    ExchangeNode node;
    node.id = as_int(field(n, "id"));
    node.B = int_mat_from_json(field(n, "B"));
    for (const auto& x : field(n, "x")) node.x.push_back(x.get<std::string>());
    node.G = int_mat_from_json(field(n, "g"));
    node.depth = as_int(field(n, "depth"));
    for (int k : int_list(field(n, "path"))) node.path.push_back(k - 1);
    g.nodes.push_back(node);
  }
  for (const auto& e : field(j, "edges"))
    g.edges.push_back({as_int(field(e, "from")), as_int(field(e, "to")), as_int(field(e, "k")) - 1});
  return g;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) throw ParseError("'kind' must be a string");
    return j.at("kind").get<std::string>();
  }
  if (j.contains("B")) return "seed";
  if (j.contains("terms")) return "qp";
  if (j.contains("arrows") && j.contains("n")) return "quiver";
  if (j.contains("dims")) return "rep";
  throw ParseError("cannot tell what kind of object this is");
}

}  // namespace hqp
