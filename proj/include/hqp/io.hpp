#pragma once

#include <string>

#include <json.hpp>

#include "hqp/gca.hpp"
#include "hqp/pathalg.hpp"
#include "hqp/rep.hpp"

namespace hqp {

using Json = nlohmann::json;

// All JSON is 1-based in vertices and arrow ids, rationals are strings.
Json datum_to_json(const MutationDatum& m);
MutationDatum datum_from_json(const Json& j);

Json quiver_to_json(const HQuiver& q);
HQuiver quiver_from_json(const Json& j);

Json qp_to_json(const QP& qp);
QP qp_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, int rows, int cols);
Json rep_to_json(const DecoratedRep& m);
DecoratedRep rep_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const VarsPtr& v, const Json& j);
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json graph_to_json(const ExchangeGraph& g);
ExchangeGraph graph_from_json(const Json& j);

Json int_mat_to_json(const IntMat& m);
IntMat int_mat_from_json(const Json& j);

// Deterministic text form used for files and HTTP bodies.
std::string dump(const Json& j);
// Throws ParseError on malformed text.
Json parse_json(const std::string& text);

// "seed", "qp", "quiver", "rep" or "graph", read from the "kind" field.
std::string kind_of(const Json& j);

}  // namespace hqp
