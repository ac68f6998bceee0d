#pragma once

#include <random>
#include <set>
#include <vector>

#include "dqgraph/generators.hpp"
#include "dqgraph/graph.hpp"
#include "dqgraph/qmatrix.hpp"

namespace dqgraph::testing {

inline Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng), g(rng), g(rng)};
}

inline DualQuaternion random_dual_quaternion(Rng& rng) { return {random_quaternion(rng), random_quaternion(rng)}; }

inline Quaternion random_unit_quaternion(Rng& rng) {
  Quaternion q;
  do q = random_quaternion(rng);
  while (q.norm() < 1e-3);
  return q.normalized();
}

inline QMatrix random_qmatrix(std::size_t rows, std::size_t cols, Rng& rng) {
  QMatrix m(rows, cols);
  for (auto& v : m.data()) v = random_quaternion(rng);
  return m;
}

inline DQMatrix random_dqmatrix(std::size_t rows, std::size_t cols, Rng& rng) {
  DQMatrix m(rows, cols);
  for (auto& v : m.data()) v = random_dual_quaternion(rng);
  return m;
}

/// Every ordered pair (i, j), i != j, is an arc with probability p.
inline Digraph random_digraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      if (i != j && coin(rng)) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

/// Random spanning tree with random orientations plus `extra` further arcs.
inline Digraph random_connected_digraph(int n, int extra, Rng& rng) {
  std::set<Arc> arcs;
  std::bernoulli_distribution coin(0.5);
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> parent(1, v - 1);
    const Vertex p = parent(rng);
    arcs.insert(coin(rng) ? Arc{p, v} : Arc{v, p});
  }
  std::uniform_int_distribution<Vertex> vertex(1, n);
  const std::size_t target = std::min<std::size_t>(arcs.size() + static_cast<std::size_t>(extra),
                                                   static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  while (arcs.size() < target) {
    const Arc a{vertex(rng), vertex(rng)};
    if (a.tail != a.head) arcs.insert(a);
  }
  return Digraph(n, {arcs.begin(), arcs.end()});
}

inline DQVector random_potential(int n, WeightType type, Rng& rng) {
  DQVector theta(static_cast<std::size_t>(n));
  for (auto& t : theta) t = random_weight(type, rng);
  return theta;
}

inline std::vector<double> random_positive(std::size_t m, Rng& rng) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::vector<double> c(m);
  for (auto& v : c) v = u(rng);
  return c;
}

inline WeightedDigraph random_balanced(const Digraph& g, WeightType type, Rng& rng) {
  const DQVector theta = random_potential(g.vertex_count(), type, rng);
  const std::vector<double> c = is_unit_type(type) ? std::vector<double>(g.arc_count(), 1.0)
                                                   : random_positive(g.arc_count(), rng);
  return from_potential(g, type, theta, c);
}

inline constexpr WeightType kAllTypes[] = {WeightType::unit_dual_quaternion, WeightType::unit_complex,
                                           WeightType::dual_quaternion, WeightType::complex, WeightType::real};

inline DualQuaternion q(double w, double x, double y, double z) { return Quaternion{w, x, y, z}; }

}  // namespace dqgraph::testing
