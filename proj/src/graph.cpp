#include "dqgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

namespace dqgraph {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_{n}, arcs_{std::move(arcs)} {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
  for (const Arc& a : arcs_) {
    if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
      throw Error(Errc::vertex_out_of_range,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") outside 1.." + std::to_string(n));
    if (a.tail == a.head) throw Error(Errc::loop_arc, "loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  const auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end())
    throw Error(Errc::duplicate_arc, "arc (" + std::to_string(dup->tail) + "," + std::to_string(dup->head) + ")");
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    out_[static_cast<std::size_t>(arcs_[e].tail - 1)].push_back(e);
    in_[static_cast<std::size_t>(arcs_[e].head - 1)].push_back(e);
  }
}

std::optional<std::size_t> Digraph::find_arc(Vertex tail, Vertex head) const {
  const Arc key{tail, head};
  const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
  if (it == arcs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

std::string_view to_string(WeightType type) noexcept {
  switch (type) {
    case WeightType::unit_dual_quaternion: return "unit_dual_quaternion";
    case WeightType::unit_complex: return "unit_complex";
    case WeightType::dual_quaternion: return "dual_quaternion";
    case WeightType::complex: return "complex";
    case WeightType::real: return "real";
  }
  return "unknown";
}

std::optional<WeightType> parse_weight_type(std::string_view name) noexcept {
  if (name == "unit_dual_quaternion" || name == "udq") return WeightType::unit_dual_quaternion;
  if (name == "unit_complex" || name == "udc") return WeightType::unit_complex;
  if (name == "dual_quaternion" || name == "dq") return WeightType::dual_quaternion;
  if (name == "complex" || name == "c") return WeightType::complex;
  if (name == "real" || name == "r") return WeightType::real;
  return std::nullopt;
}

bool is_unit_type(WeightType type) noexcept {
  return type == WeightType::unit_dual_quaternion || type == WeightType::unit_complex;
}

namespace {

bool in_complex_plane(const Quaternion& q) { return std::abs(q.y) <= kUnitTol && std::abs(q.z) <= kUnitTol; }
bool on_real_axis(const Quaternion& q) { return std::abs(q.x) <= kUnitTol && in_complex_plane(q); }

}  // namespace

void validate_weight(const DualQuaternion& w, WeightType type) {
  switch (type) {
    case WeightType::unit_complex:
      if (!in_complex_plane(w.s) || !in_complex_plane(w.d))
        throw Error(Errc::weight_type_mismatch, "unit_complex weight has j or k components");
      [[fallthrough]];
    case WeightType::unit_dual_quaternion:
      if (!is_unit(w)) throw Error(Errc::non_unit_weight, "weight is not a unit dual quaternion");
      return;
    case WeightType::complex:
      if (!in_complex_plane(w.s) || !in_complex_plane(w.d))
        throw Error(Errc::weight_type_mismatch, "complex weight has j or k components");
      break;
    case WeightType::real:
      if (!on_real_axis(w.s) || !on_real_axis(w.d)) throw Error(Errc::weight_type_mismatch, "real weight has i, j or k components");
      break;
    case WeightType::dual_quaternion:
      break;
  }
  if (!w.is_appreciable()) throw Error(Errc::non_appreciable_weight, "weight has zero standard part");
}

WeightedDigraph WeightedDigraph::build(int n, std::vector<WeightedArc> arcs, WeightType type) {
  std::vector<Arc> plain;
  plain.reserve(arcs.size());
  for (const auto& a : arcs) {
    validate_weight(a.weight, type);
    plain.push_back({a.tail, a.head});
  }
  WeightedDigraph g;
  g.graph_ = Digraph(n, std::move(plain));
  g.type_ = type;
  g.weights_.resize(arcs.size());
  for (const auto& a : arcs) g.weights_[*g.graph_.find_arc(a.tail, a.head)] = a.weight;
  return g;
}

std::optional<DualQuaternion> WeightedDigraph::weight(Vertex tail, Vertex head) const {
  const auto e = graph_.find_arc(tail, head);
  if (!e) return std::nullopt;
  return weights_[*e];
}

std::vector<WeightedArc> WeightedDigraph::weighted_arcs() const {
  std::vector<WeightedArc> out;
  out.reserve(arc_count());
  for (std::size_t e = 0; e < arc_count(); ++e) out.push_back({graph_.arc(e).tail, graph_.arc(e).head, weights_[e]});
  return out;
}

WeightedDigraph WeightedDigraph::with_weight(std::size_t arc_index, const DualQuaternion& w) const {
  if (arc_index >= arc_count()) throw Error(Errc::arc_not_found, "arc index out of range");
  validate_weight(w, type_);
  WeightedDigraph copy = *this;
  copy.weights_[arc_index] = w;
  return copy;
}

DualQuaternion weight_inverse(const DualQuaternion& w, WeightType type) {
  return is_unit_type(type) ? w.conj() : w.inverse();
}

bool is_weakly_connected(const Digraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex u) {
      if (!seen[static_cast<std::size_t>(u - 1)]) {
        seen[static_cast<std::size_t>(u - 1)] = 1;
        ++reached;
        stack.push_back(u);
      }
    };
    for (std::size_t e : g.out_arcs(v)) visit(g.arc(e).head);
    for (std::size_t e : g.in_arcs(v)) visit(g.arc(e).tail);
  }
  return reached == n;
}

std::vector<int> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> tarjan_stack;
  struct Frame {
    std::size_t v;
    std::size_t next_arc;
  };
  std::vector<Frame> call_stack;
  int counter = 0;
  int components = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call_stack.push_back({root, 0});
    index[root] = low[root] = counter++;
    tarjan_stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      const auto& outs = g.out_arcs(static_cast<Vertex>(f.v + 1));
      if (f.next_arc < outs.size()) {
        const auto w = static_cast<std::size_t>(g.arc(outs[f.next_arc++]).head - 1);
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          tarjan_stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call_stack.pop_back();
      if (!call_stack.empty()) low[call_stack.back().v] = std::min(low[call_stack.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = tarjan_stack.back();
          tarjan_stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return comp;
}

bool has_directed_spanning_tree(const Digraph& g) {
  if (g.vertex_count() == 0) return false;
  const std::vector<int> comp = strongly_connected_components(g);
  const int count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<char> has_exit(static_cast<std::size_t>(count), 0);
  for (const Arc& a : g.arcs()) {
    const int ct = comp[static_cast<std::size_t>(a.tail - 1)];
    if (ct != comp[static_cast<std::size_t>(a.head - 1)]) has_exit[static_cast<std::size_t>(ct)] = 1;
  }
  return std::count(has_exit.begin(), has_exit.end(), 0) == 1;
}

double out_degree(const WeightedDigraph& g, Vertex i) {
  if (i < 1 || i > g.vertex_count()) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(i));
  const auto& outs = g.graph().out_arcs(i);
  if (is_unit_type(g.weight_type())) return static_cast<double>(outs.size());
  double d = 0.0;
  for (std::size_t e : outs) d += g.weight(e).s.norm();
  return d;
}

DQMatrix laplacian(const WeightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DQMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = out_degree(g, static_cast<Vertex>(i + 1));
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.graph().arc(e);
    l(static_cast<std::size_t>(a.tail - 1), static_cast<std::size_t>(a.head - 1)) = -g.weight(e);
  }
  return l;
}

RealMatrix unweighted_laplacian(const Digraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  RealMatrix l = RealMatrix::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    l(a.tail - 1, a.tail - 1) += 1.0;
    l(a.tail - 1, a.head - 1) = -1.0;
  }
  return l;
}

RealMatrix magnitude_laplacian(const WeightedDigraph& g) {
  if (is_unit_type(g.weight_type())) return unweighted_laplacian(g.graph());
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  RealMatrix l = RealMatrix::Zero(n, n);
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.graph().arc(e);
    const double m = g.weight(e).s.norm();
    l(a.tail - 1, a.tail - 1) += m;
    l(a.tail - 1, a.head - 1) = -m;
  }
  return l;
}

Walk as_walk(const CycleWithOrientation& c) {
  Walk w{c.vertices, c.forward};
  if (!c.vertices.empty()) w.vertices.push_back(c.vertices.front());
  return w;
}

CycleWithOrientation reversed(const CycleWithOrientation& c) {
  const std::size_t k = c.length();
  CycleWithOrientation r;
  if (k == 0) return r;
  // Reverse traversal visits i_1, i_k, ..., i_2; the step i_{j+1} -> i_j uses
  // the same arc with the opposite orientation flag.
  r.vertices.push_back(c.vertices[0]);
  for (std::size_t j = k - 1; j >= 1; --j) r.vertices.push_back(c.vertices[j]);
  for (std::size_t j = k; j-- > 0;) r.forward.push_back(!c.forward[j]);
  return r;
}

DualQuaternion walk_weight(const WeightedDigraph& g, const Walk& w) {
  if (w.vertices.empty() || w.forward.size() + 1 != w.vertices.size())
    throw Error(Errc::invalid_walk, "walk needs one orientation flag per step");
  DualQuaternion product = DualQuaternion::identity();
  for (std::size_t j = 0; j < w.forward.size(); ++j) {
    const Vertex a = w.vertices[j];
    const Vertex b = w.vertices[j + 1];
    const auto e = w.forward[j] ? g.graph().find_arc(a, b) : g.graph().find_arc(b, a);
    if (!e)
      throw Error(Errc::invalid_walk, "step " + std::to_string(a) + "->" + std::to_string(b) + " has no matching arc");
    product = product * (w.forward[j] ? g.weight(*e) : weight_inverse(g.weight(*e), g.weight_type()));
  }
  return product;
}

DualQuaternion walk_weight(const WeightedDigraph& g, const CycleWithOrientation& c) {
  if (c.vertices.size() != c.forward.size()) throw Error(Errc::invalid_walk, "cycle needs one orientation flag per step");
  return walk_weight(g, as_walk(c));
}

bool lies_on_cycle(const Digraph& g, std::size_t arc_index) {
  if (arc_index >= g.arc_count()) throw Error(Errc::arc_not_found, "arc index out of range");
  const Arc removed = g.arc(arc_index);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{removed.tail};
  seen[static_cast<std::size_t>(removed.tail - 1)] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == removed.head) return true;
    auto visit = [&](std::size_t e, Vertex u) {
      if (e == arc_index || seen[static_cast<std::size_t>(u - 1)]) return;
      seen[static_cast<std::size_t>(u - 1)] = 1;
      stack.push_back(u);
    };
    for (std::size_t e : g.out_arcs(v)) visit(e, g.arc(e).head);
    for (std::size_t e : g.in_arcs(v)) visit(e, g.arc(e).tail);
  }
  return false;
}

}  // namespace dqgraph
