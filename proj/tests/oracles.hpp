#pragma once

// Reference implementations used to cross-check the library. They are
// deliberately naive: exhaustive search, dense closures, textbook formulas.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dqgraph/graph.hpp"

namespace dqgraph::oracle {

/// Hamilton product through the left-multiplication matrix of a.
inline Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
  Eigen::Matrix4d left;
  left << a.w, -a.x, -a.y, -a.z,
          a.x,  a.w, -a.z,  a.y,
          a.y,  a.z,  a.w, -a.x,
          a.z, -a.y,  a.x,  a.w;
  const Eigen::Vector4d r = left * Eigen::Vector4d(b.w, b.x, b.y, b.z);
  return {r(0), r(1), r(2), r(3)};
}

/// Simple cycles of the underlying undirected multigraph, found as the edge
/// subsets that are connected and 2-regular on their support. Each cycle is
/// returned as its sorted list of arc indices. Only for small arc counts.
inline std::vector<std::vector<std::size_t>> cycle_edge_sets(const Digraph& g) {
  const std::size_t m = g.arc_count();
  std::vector<std::vector<std::size_t>> out;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> degree(n + 1, 0);
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1U) {
        edges.push_back(e);
        ++degree[static_cast<std::size_t>(g.arc(e).tail)];
        ++degree[static_cast<std::size_t>(g.arc(e).head)];
      }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;
    std::vector<std::size_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t e : edges)
      parent[find(static_cast<std::size_t>(g.arc(e).tail))] = find(static_cast<std::size_t>(g.arc(e).head));
    std::size_t roots = 0;
    for (std::size_t v = 1; v <= n; ++v)
      if (degree[v] != 0 && find(v) == v) ++roots;
    if (roots == 1) out.push_back(edges);
  }
  return out;
}

/// Arc indices used by an oriented cycle, sorted.
inline std::vector<std::size_t> edge_set(const Digraph& g, const CycleWithOrientation& c) {
  std::vector<std::size_t> edges;
  for (std::size_t k = 0; k < c.length(); ++k) {
    const Vertex a = c.vertices[k];
    const Vertex b = c.vertices[(k + 1) % c.length()];
    const auto e = c.forward[k] ? g.find_arc(a, b) : g.find_arc(b, a);
    edges.push_back(e.value_or(g.arc_count()));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Transitive closure by Floyd-Warshall; true iff some vertex is reachable
/// from all others.
inline bool reaches_common_root(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Arc& a : g.arcs()) reach[static_cast<std::size_t>(a.tail - 1)][static_cast<std::size_t>(a.head - 1)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t r = 0; r < n; ++r) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) all = reach[i][r];
    if (all) return true;
  }
  return false;
}

/// L = D - A has a simple zero eigenvalue with eigenvector 1: L 1 = 0 and
/// rank(L) = n - 1. The zero eigenvalue of an out-degree Laplacian is
/// semisimple, so geometric and algebraic multiplicity coincide.
inline bool simple_zero_eigenvalue(const Eigen::MatrixXd& laplacian, double tol = 1e-10) {
  const Eigen::Index n = laplacian.rows();
  if ((laplacian * Eigen::VectorXd::Ones(n)).norm() > tol) return false;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(laplacian);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index positive = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++positive;
  return n - positive == 1;
}

/// Algebraic multiplicity of the eigenvalue zero counted from the spectrum.
inline int zero_eigenvalue_count(const Eigen::MatrixXd& laplacian, double tol = 1e-6) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(laplacian, false);
  int count = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (std::abs(es.eigenvalues()(k)) < tol) ++count;
  return count;
}

}  // namespace dqgraph::oracle
