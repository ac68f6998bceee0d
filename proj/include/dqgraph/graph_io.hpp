#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dqgraph/balance.hpp"
#include "dqgraph/graph.hpp"

namespace dqgraph {

// Graph file layout:
//   {"n": 3, "weight_type": "unit_dual_quaternion",
//    "arcs": [{"tail": 1, "head": 2, "w": {"s": [w,x,y,z], "d": [w,x,y,z]}}, ...]}
// Doubles are written with round-trip precision, so parse(serialize(g)) == g.

nlohmann::json to_json(const DualQuaternion& q);
/// Throws Error(parse_error).
DualQuaternion dual_quaternion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeightedDigraph& g);
/// Throws Error(parse_error) on malformed input and the graph_model errors
/// on invalid graphs.
WeightedDigraph graph_from_json(const nlohmann::json& j);

std::string serialize_graph(const WeightedDigraph& g);
WeightedDigraph parse_graph(std::string_view text);

WeightedDigraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const WeightedDigraph& g);

nlohmann::json to_json(const CycleWithOrientation& c);
/// verdict, method, err, failure_stage, formation, null_vector, witness, seconds, detail.
nlohmann::json to_json(const BalanceReport& r);

}  // namespace dqgraph
