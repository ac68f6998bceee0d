#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dqgraph/dual_quaternion.hpp"
#include "dqgraph/qmatrix.hpp"

namespace dqgraph {

/// Vertices are numbered 1..n.
using Vertex = int;

struct Arc {
  Vertex tail{0};
  Vertex head{0};

  auto operator<=>(const Arc&) const = default;
};

/// Loopless digraph without duplicate arcs. Antiparallel pairs are allowed.
/// Arcs are kept sorted by (tail, head); arc indices refer to that order.
class Digraph {
 public:
  Digraph() = default;
  /// Throws Error(loop_arc), Error(duplicate_arc) or Error(vertex_out_of_range).
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t index) const { return arcs_[index]; }

  std::optional<std::size_t> find_arc(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }

  /// Indices of arcs leaving / entering `v`.
  const std::vector<std::size_t>& out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<std::size_t>& in_arcs(Vertex v) const { return in_[static_cast<std::size_t>(v - 1)]; }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  int n_{0};
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

enum class WeightType { unit_dual_quaternion, unit_complex, dual_quaternion, complex, real };

std::string_view to_string(WeightType type) noexcept;
/// Accepts the canonical names plus the short aliases udq, udc, dq, c, r.
std::optional<WeightType> parse_weight_type(std::string_view name) noexcept;
/// unit_dual_quaternion and unit_complex carry unit weights.
bool is_unit_type(WeightType type) noexcept;

/// Throws Error(non_unit_weight), Error(non_appreciable_weight) or
/// Error(weight_type_mismatch) when `w` is not a member of the weight group.
///
/// unit_complex and complex weights live in span{1, i} for both parts;
/// real weights are dual numbers.
void validate_weight(const DualQuaternion& w, WeightType type);

struct WeightedArc {
  Vertex tail{0};
  Vertex head{0};
  DualQuaternion weight;
};

/// Digraph with a weight per arc. Immutable after construction.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  static WeightedDigraph build(int n, std::vector<WeightedArc> arcs, WeightType type);

  const Digraph& graph() const { return graph_; }
  WeightType weight_type() const { return type_; }
  int vertex_count() const { return graph_.vertex_count(); }
  std::size_t arc_count() const { return graph_.arc_count(); }

  const DualQuaternion& weight(std::size_t arc_index) const { return weights_[arc_index]; }
  std::optional<DualQuaternion> weight(Vertex tail, Vertex head) const;
  const std::vector<DualQuaternion>& weights() const { return weights_; }
  std::vector<WeightedArc> weighted_arcs() const;

  /// Copy with the weight of one arc replaced (re-validated).
  WeightedDigraph with_weight(std::size_t arc_index, const DualQuaternion& w) const;

  bool operator==(const WeightedDigraph&) const = default;

 private:
  Digraph graph_;
  WeightType type_{WeightType::unit_dual_quaternion};
  std::vector<DualQuaternion> weights_;
};

/// Inverse of a weight; the conjugate for unit weight types.
DualQuaternion weight_inverse(const DualQuaternion& w, WeightType type);

bool is_weakly_connected(const Digraph& g);

/// Strongly connected component id (0-based) for each vertex, index v - 1.
std::vector<int> strongly_connected_components(const Digraph& g);

/// True iff some vertex is reachable from every other vertex, i.e. the SCC
/// condensation has exactly one sink.
bool has_directed_spanning_tree(const Digraph& g);

/// d_i = sum over out-arcs of |phi_s(i, j)|.
double out_degree(const WeightedDigraph& g, Vertex i);

/// L = D - A with D the diagonal of out-degrees and A_ij = phi(i, j) on arcs.
DQMatrix laplacian(const WeightedDigraph& g);

/// D - A with the 0/1 adjacency of g.
RealMatrix unweighted_laplacian(const Digraph& g);

/// D - A with a_ij = |phi_s(i, j)| and D the out-degrees of g.
RealMatrix magnitude_laplacian(const WeightedDigraph& g);

/// Cycle i_1 .. i_k (closing back to i_1). Step j goes vertices[j] ->
/// vertices[(j + 1) % k] along arc (vertices[j], next) when forward[j], and
/// along arc (next, vertices[j]) otherwise.
struct CycleWithOrientation {
  std::vector<Vertex> vertices;
  std::vector<bool> forward;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const CycleWithOrientation&) const = default;
};

/// Open walk: step j goes vertices[j] -> vertices[j + 1].
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<bool> forward;
};

Walk as_walk(const CycleWithOrientation& c);
/// Same cycle traversed the other way round.
CycleWithOrientation reversed(const CycleWithOrientation& c);

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;

struct CycleEnumeration {
  std::vector<CycleWithOrientation> cycles;
  bool truncated{false};
};

/// All simple cycles of the underlying undirected multigraph (antiparallel
/// arcs are distinct parallel edges, so they form 2-cycles). Each cycle is
/// reported once: it starts at its smallest vertex and is traversed in the
/// direction whose first edge has the smaller arc index.
CycleEnumeration enumerate_cycles(const Digraph& g, std::size_t max_cycles = kDefaultMaxCycles);

/// Product of shadow elements along the walk: phi(a, b) for forward steps,
/// phi(b, a)^-1 for backward ones. Throws Error(invalid_walk).
DualQuaternion walk_weight(const WeightedDigraph& g, const Walk& w);
DualQuaternion walk_weight(const WeightedDigraph& g, const CycleWithOrientation& c);

/// True iff the arc is not a bridge of the underlying undirected multigraph.
bool lies_on_cycle(const Digraph& g, std::size_t arc_index);

}  // namespace dqgraph
