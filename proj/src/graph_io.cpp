#include "dqgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace dqgraph {

using nlohmann::json;

namespace {

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4)
    throw Error(Errc::parse_error, std::string(what) + " must be an array of 4 numbers");
  double c[4];
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_number()) throw Error(Errc::parse_error, std::string(what) + " must be an array of 4 numbers");
    c[k] = j[k].get<double>();
  }
  return {c[0], c[1], c[2], c[3]};
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse_error, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int integer_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw Error(Errc::parse_error, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

json quaternion_vector_json(const DQVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

}  // namespace

json to_json(const DualQuaternion& q) { return {{"s", quaternion_json(q.s)}, {"d", quaternion_json(q.d)}}; }

DualQuaternion dual_quaternion_from_json(const json& j) {
  return {quaternion_from_json(member(j, "s"), "\"s\""), quaternion_from_json(member(j, "d"), "\"d\"")};
}

json to_json(const WeightedDigraph& g) {
  json arcs = json::array();
  for (const auto& a : g.weighted_arcs()) arcs.push_back({{"tail", a.tail}, {"head", a.head}, {"w", to_json(a.weight)}});
  return {{"n", g.vertex_count()}, {"weight_type", std::string(to_string(g.weight_type()))}, {"arcs", std::move(arcs)}};
}

WeightedDigraph graph_from_json(const json& j) {
  const int n = integer_member(j, "n");
  const json& type_field = member(j, "weight_type");
  if (!type_field.is_string()) throw Error(Errc::parse_error, "\"weight_type\" must be a string");
  const auto type = parse_weight_type(type_field.get<std::string>());
  if (!type) throw Error(Errc::parse_error, "unknown weight_type \"" + type_field.get<std::string>() + "\"");
  const json& arcs_field = member(j, "arcs");
  if (!arcs_field.is_array()) throw Error(Errc::parse_error, "\"arcs\" must be an array");
  std::vector<WeightedArc> arcs;
  arcs.reserve(arcs_field.size());
  for (const json& a : arcs_field)
    arcs.push_back({integer_member(a, "tail"), integer_member(a, "head"), dual_quaternion_from_json(member(a, "w"))});
  return WeightedDigraph::build(n, std::move(arcs), *type);
}

std::string serialize_graph(const WeightedDigraph& g) { return to_json(g).dump(2); }

WeightedDigraph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return graph_from_json(j);
}

WeightedDigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const WeightedDigraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << serialize_graph(g) << '\n';
}

json to_json(const CycleWithOrientation& c) {
  json forward = json::array();
  for (bool f : c.forward) forward.push_back(f);
  return {{"vertices", c.vertices}, {"forward", std::move(forward)}};
}

json to_json(const BalanceReport& r) {
  json out{{"verdict", std::string(to_string(r.verdict))},
           {"method", std::string(to_string(r.method))},
           {"seconds", r.seconds}};
  out["err"] = r.err ? json(*r.err) : json(nullptr);
  out["failure_stage"] = r.failure_stage ? json(std::string(to_string(*r.failure_stage))) : json(nullptr);
  out["formation"] = r.formation ? quaternion_vector_json(*r.formation) : json(nullptr);
  out["null_vector"] = r.null_vector ? quaternion_vector_json(*r.null_vector) : json(nullptr);
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

}  // namespace dqgraph
