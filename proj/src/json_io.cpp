#include "cayley/json_io.hpp"

#include <fstream>

#include "cayley/errors.hpp"

namespace cayley {

Json vertex_to_json(const GroupGraph& host, const Vertex& v) {
  if (host.is_free_group()) return v.empty() ? std::string() : host.format_vertex(v);
  Json arr = Json::array();
  for (auto c : v.coords()) arr.push_back(c);
  return arr;
}

Vertex vertex_from_json(const GroupGraph& host, const Json& j) {
  if (host.is_free_group()) {
    if (!j.is_string()) throw ParseError("free-group vertices must be word strings, got " + j.dump());
    return host.parse_word(j.get<std::string>());
  }
  if (!j.is_array()) throw ParseError("vertex must be an integer array, got " + j.dump());
  Vertex v;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("vertex coordinates must be integers, got " + j.dump());
    v.push_back(c.get<std::int64_t>());
  }
  host.validate(v);
  return v;
}

Json set_to_json(const VertexSet& a) {
  Json j;
  j["group"] = a.host().name();
  Json verts = Json::array();
  for (const Vertex& v : a.sorted()) verts.push_back(vertex_to_json(a.host(), v));
  j["vertices"] = std::move(verts);
  return j;
}

VertexSet set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("vertices")) {
    throw ParseError("set literal needs \"group\" and \"vertices\" fields");
  }
  if (!j["group"].is_string() || !j["vertices"].is_array()) {
    throw ParseError("set literal: \"group\" must be a string and \"vertices\" an array");
  }
  GroupGraph host = GroupGraph::parse(j["group"].get<std::string>());
  VertexSet a(host);
  for (const auto& v : j["vertices"]) a.insert(vertex_from_json(host, v));
  return a;
}

VertexSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed set file '" + path.string() + "': " + e.what());
  }
  return set_from_json(j);
}

void write_set_file(const std::filesystem::path& path, const VertexSet& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write set file '" + path.string() + "'");
  out << set_to_json(a).dump() << '\n';
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["sizes"] = r.sizes;
  j["branch"] = to_string(r.branch);
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["linearEnvelopeBelowQuadratic"] = r.linear_envelope_below_quadratic;
  j["quadraticLowerBoundHolds"] = r.quadratic_lower_bound_holds;
  j["firstQuadraticFailure"] = r.first_quadratic_failure;
  j["dichotomyHolds"] = r.dichotomy_holds();
  return j;
}

Json to_json(const VaropoulosResult& r) {
  return Json{{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

Json to_json(const SeparationReport& r) {
  Json j;
  j["sizeA"] = r.size_a;
  j["boundarySize"] = r.boundary_size;
  j["depth"] = r.depth;
  j["connectedAUnionBoundary"] = r.connected_a_union_boundary;
  j["branch"] = to_string(r.branch);
  Json ineq = Json::array();
  for (const Inequality& q : r.inequalities) {
    ineq.push_back(Json{{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"holds", q.holds}, {"mandatory", q.mandatory}});
  }
  j["inequalities"] = std::move(ineq);
  j["delegated"] = r.delegated;
  j["hostEnds"] = to_string(r.host_ends);
  j["consistent"] = r.consistent();
  return j;
}

Json to_json(const counterexample::CounterexampleStats& s) {
  Json j;
  j["params"] = Json{{"i", s.params.i}, {"k", s.params.k}};
  j["sizeA"] = s.size_a;
  j["boundarySize"] = s.boundary_size;
  j["depthOracle"] = s.depth_oracle;
  j["ratio"] = to_string(s.ratio);
  j["closedFormsMatch"] = s.closed_forms_match;
  j["boundaryClosedForm"] = s.boundary_formula;
  j["sizeKiSquaredFormula"] = s.size_formula_ki_squared;
  j["sizeMatchesKiSquaredFormula"] = s.size_matches_ki_squared;
  j["depthHalfIBound"] = to_string(s.half_i);
  j["depthAtMostHalfI"] = s.depth_at_most_half_i;
  return j;
}

Json to_json(const counterexample::FindResult& r) {
  Json j;
  j["params"] = Json{{"i", r.params.i}, {"k", r.params.k}};
  j["scanRatio"] = to_string(r.scan_ratio);
  j["evaluated"] = r.evaluated;
  j["verified"] = r.verified;
  j["stats"] = to_json(r.stats);
  return j;
}

namespace {

Json measure_json(const LatticeMeasure& m) {
  return Json{{"sizeA", m.size}, {"boundarySize", m.boundary_size}, {"depth", m.depth}};
}

}  // namespace

Json to_json(const counterexample::TorusEmbedding& e) {
  Json j;
  j["params"] = Json{{"i", e.params.i}, {"k", e.params.k}};
  j["group"] = e.host.name();
  j["n"] = e.n;
  j["order"] = *e.host.order();
  j["lattice"] = measure_json(e.lattice);
  j["torus"] = measure_json(e.torus);
  j["preserved"] = e.preserved;
  j["halfVolume"] = e.half_volume;
  j["ratio"] = to_string(e.ratio);
  return j;
}

Json to_json(const ringlike::CyclicSystem& sys) {
  Json j;
  j["group"] = sys.host.name();
  j["window"] = sys.window;
  j["s"] = sys.s;
  j["t"] = sys.t;
  j["q"] = sys.q;
  j["cohesivenessBound"] = 2 * sys.s * sys.t;
  j["partitionOk"] = sys.partition_ok;
  j["ringLikeOk"] = sys.ring_like_ok;
  j["cohesiveOk"] = sys.cohesive_ok;
  j["holds"] = sys.holds();
  return j;
}

Json to_json(const ringlike::IntervalCover& c, const ringlike::CyclicSystem& sys) {
  Json j;
  j["s"] = sys.s;
  j["t"] = sys.t;
  j["q"] = sys.q;
  j["k"] = c.k;
  j["interval"] = Json::array({c.lo, c.hi});
  j["qSize"] = c.q_size;
  j["contained"] = c.contained;
  j["slack"] = c.slack;
  j["bound"] = c.bound;
  j["holds"] = c.holds;
  return j;
}

Json to_json(const ringlike::Branch2Report& r) {
  Json j;
  j["separation"] = to_json(r.separation);
  j["system"] = to_json(r.system);
  j["cover"] = to_json(r.cover, r.system);
  j["holds"] = r.holds();
  return j;
}

}  // namespace cayley
