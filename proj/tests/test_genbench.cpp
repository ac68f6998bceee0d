#include <sstream>

#include "doctest.h"

#include "dqgraph/bench.hpp"
#include "dqgraph/generators.hpp"
#include "dqgraph/graph_io.hpp"
#include "support.hpp"

using namespace dqgraph;
using dqgraph::testing::kAllTypes;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("graph JSON round trip is bit exact") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const WeightType type = kAllTypes[t % 5];
    const WeightedDigraph g = gen_random_balanced(9, 0.7, type, rng(), t % 2 == 0);
    const WeightedDigraph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph JSON layout") {
  const auto g = WeightedDigraph::build(2, {{1, 2, DualQuaternion{Quaternion::i(), Quaternion::j()}}},
                                        WeightType::unit_dual_quaternion);
  const nlohmann::json j = to_json(g);
  CHECK(j["n"] == 2);
  CHECK(j["weight_type"] == "unit_dual_quaternion");
  CHECK(j["arcs"][0]["tail"] == 1);
  CHECK(j["arcs"][0]["head"] == 2);
  CHECK(j["arcs"][0]["w"]["s"] == nlohmann::json::array({0.0, 1.0, 0.0, 0.0}));
  CHECK(j["arcs"][0]["w"]["d"] == nlohmann::json::array({0.0, 0.0, 1.0, 0.0}));
}

TEST_CASE("malformed graph files") {
  CHECK(code_of([] { (void)parse_graph("{not json"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_graph(R"({"n": 2, "weight_type": "udq"})"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_graph(R"({"n": 2, "weight_type": "octonion", "arcs": []})"); }) == Errc::parse_error);
  CHECK(code_of([] {
          (void)parse_graph(R"({"n": 2, "weight_type": "udq", "arcs": [{"tail": 1, "head": 2, "w": {"s": [1, 0, 0], "d": [0, 0, 0, 0]}}]})");
        }) == Errc::parse_error);
  // Structural problems keep their own codes.
  CHECK(code_of([] {
          (void)parse_graph(R"({"n": 2, "weight_type": "udq", "arcs": [{"tail": 1, "head": 1, "w": {"s": [1, 0, 0, 0], "d": [0, 0, 0, 0]}}]})");
        }) == Errc::loop_arc);
  CHECK(code_of([] {
          (void)parse_graph(R"({"n": 2, "weight_type": "udq", "arcs": [{"tail": 1, "head": 2, "w": {"s": [2, 0, 0, 0], "d": [0, 0, 0, 0]}}]})");
        }) == Errc::non_unit_weight);
  CHECK(code_of([] { (void)read_graph_file("/nonexistent/graph.json"); }) == Errc::parse_error);
}

TEST_CASE("report JSON") {
  const WeightedDigraph g = gen_cycle(4, WeightType::unit_dual_quaternion, 3);
  const nlohmann::json j = to_json(check_balance(g, Method::direct));
  CHECK(j["verdict"] == "balanced");
  CHECK(j["method"] == "direct");
  CHECK(j["err"].get<double>() <= kBalanceTol);
  CHECK(j["formation"].size() == 4);
  CHECK(j["formation"][0]["s"].size() == 4);

  const WeightedDigraph bad = perturb(g, {1, 2}, 9);
  const nlohmann::json c = to_json(check_balance(bad, Method::cycle_oracle));
  CHECK(c["verdict"] == "unbalanced");
  CHECK(c["failure_stage"] == "cycle_found");
  CHECK(c["witness"]["vertices"].size() == 4);
}

TEST_CASE("cycle generator") {
  for (WeightType type : kAllTypes) {
    const WeightedDigraph g = gen_cycle(3, type, 5);
    CHECK(g.arc_count() == 3);
    CHECK(cycle_oracle(g).verdict == Verdict::balanced);
    CHECK(gen_cycle(3, type, 5) == g);
  }
  CHECK(code_of([] { (void)gen_cycle(2, WeightType::unit_dual_quaternion, 1); }) == Errc::invalid_argument);

  const DQVector ones(5, DualQuaternion{1.0});
  const std::vector<double> c(5, 1.0);
  const WeightedDigraph g = from_potential(gen_cycle(5, WeightType::unit_dual_quaternion, 1).graph(),
                                           WeightType::unit_dual_quaternion, ones, c);
  for (const auto& w : g.weights()) CHECK(w == DualQuaternion{1.0});
}

TEST_CASE("random balanced generator") {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const WeightType type = kAllTypes[t % 5];
    const bool dst = t % 3 == 0;
    const WeightedDigraph g = gen_random_balanced(12, 0.5, type, rng(), dst);
    CHECK(is_weakly_connected(g.graph()));
    CHECK(g.arc_count() == 11 + 6);
    if (dst) CHECK(has_directed_spanning_tree(g.graph()));
    CHECK(cycle_oracle(g).verdict == Verdict::balanced);
    if (is_unit_type(type) && dst) {
      const BalanceReport r = direct_method(g);
      CHECK(r.verdict == Verdict::balanced);
      REQUIRE(r.err);
      CHECK(*r.err <= kBalanceTol);
    }
  }
  const WeightedDigraph tree = gen_random_balanced(10, 0.0, WeightType::unit_dual_quaternion, 7, true);
  CHECK(tree.arc_count() == 9);
  CHECK(enumerate_cycles(tree.graph()).cycles.empty());
}

TEST_CASE("recovered formation lies in the class of the generating one") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Digraph d = dqgraph::testing::random_connected_digraph(8, 5, rng);
    const DQVector theta = dqgraph::testing::random_potential(8, WeightType::unit_dual_quaternion, rng);
    const WeightedDigraph g =
        from_potential(d, WeightType::unit_dual_quaternion, theta, std::vector<double>(d.arc_count(), 1.0));
    const BalanceReport r = direct_method(g);
    if (r.verdict == Verdict::indeterminate) continue;
    REQUIRE(r.formation);
    // formation = c theta for the single unit c = formation_1 theta_1^*.
    const DualQuaternion c = (*r.formation)[0] * theta[0].conj();
    for (std::size_t i = 0; i < theta.size(); ++i) CHECK(distance((*r.formation)[i], c * theta[i]) < 1e-9);
  }
}

TEST_CASE("perturbation") {
  Rng rng(4);
  for (WeightType type : kAllTypes) {
    const WeightedDigraph g = gen_cycle(6, type, rng());
    const WeightedDigraph bad = perturb(g, {3, 4}, rng());
    CHECK(distance(*bad.weight(3, 4), *g.weight(3, 4)) >= 1e-3);
    CHECK(cycle_oracle(bad).verdict == Verdict::unbalanced);
    if (is_unit_type(type)) {
      CHECK(direct_method(bad).verdict == Verdict::unbalanced);
      CHECK(gain_graph_method(bad).verdict == Verdict::unbalanced);
    } else {
      CHECK(wdg_similarity_method(bad).verdict == Verdict::unbalanced);
    }
    const WeightedDigraph restored = bad.with_weight(*bad.graph().find_arc(3, 4), *g.weight(3, 4));
    CHECK(cycle_oracle(restored).verdict == Verdict::balanced);
  }
  const WeightedDigraph tree = gen_tree(5, WeightType::unit_dual_quaternion, 1);
  const Arc a = tree.graph().arc(0);
  CHECK(cycle_oracle(perturb(tree, a, 2)).verdict == Verdict::balanced);
  CHECK_FALSE(pick_cycle_arc(tree, 3));
  CHECK(code_of([&] { (void)perturb(tree, {a.head, a.tail}, 1); }) == Errc::arc_not_found);
}

TEST_CASE("perturbed i, j, k cycle fails every method") {
  const auto g = WeightedDigraph::build(
      3, {{1, 3, Quaternion::i()}, {2, 1, Quaternion::j()}, {3, 2, Quaternion::k()}}, WeightType::unit_dual_quaternion);
  const WeightedDigraph bad = perturb(g, {3, 2}, 11);
  for (Method m : {Method::direct, Method::gain_graph, Method::cycle_oracle, Method::wdg_similarity})
    CHECK(check_balance(bad, m).verdict == Verdict::unbalanced);
}

TEST_CASE("bench grid") {
  BenchConfig config;
  config.sizes = {5, 12};
  const auto a = bench(config);
  REQUIRE(a.size() == 8);
  for (const auto& r : a) {
    CHECK(r.verdict == Verdict::balanced);
    CHECK(r.err <= kBalanceTol);
    CHECK(r.err >= 0.0);
    CHECK(r.cpu_seconds >= 0.0);
  }
  const auto b = bench(config);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].err == b[k].err);
    CHECK(a[k].verdict == b[k].verdict);
  }

  std::ostringstream csv;
  write_csv(csv, a);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "n,weight_type,method,cpu_seconds,err,verdict");
  CHECK(first.rfind("5,unit_complex,direct,", 0) == 0);
  CHECK(first.size() > std::string("5,unit_complex,direct,").size());
}
