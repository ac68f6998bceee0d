#include "dqgraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace dqgraph {

namespace {

constexpr double kMinScale = 0.5;
constexpr double kMaxScale = 2.0;

DQVector random_potential(int n, WeightType type, Rng& rng) {
  DQVector theta(static_cast<std::size_t>(n));
  for (auto& t : theta) t = random_weight(type, rng);
  return theta;
}

std::vector<double> random_scales(std::size_t m, WeightType type, Rng& rng) {
  std::vector<double> c(m, 1.0);
  if (is_unit_type(type)) return c;
  std::uniform_real_distribution<double> scale(kMinScale, kMaxScale);
  for (auto& v : c) v = scale(rng);
  return c;
}

WeightedDigraph balanced_on(const Digraph& g, WeightType type, Rng& rng) {
  const DQVector theta = random_potential(g.vertex_count(), type, rng);
  const std::vector<double> c = random_scales(g.arc_count(), type, rng);
  return from_potential(g, type, theta, c);
}

/// Parent of vertex perm[k] is perm[uniform(0, k-1)].
std::vector<Arc> random_tree_arcs(int n, bool towards_root, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Arc> arcs;
  for (std::size_t k = 1; k < perm.size(); ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    const Vertex parent = perm[pick(rng)];
    const Vertex child = perm[k];
    if (towards_root || coin(rng))
      arcs.push_back({child, parent});
    else
      arcs.push_back({parent, child});
  }
  return arcs;
}

}  // namespace

UnitDualQuaternion random_unit_dual_complex(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double a = angle(rng);
  return udq_from_motion({std::cos(a), std::sin(a), 0.0, 0.0}, {0.0, gauss(rng), 0.0, 0.0});
}

DualQuaternion random_weight(WeightType type, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> scale(kMinScale, kMaxScale);
  switch (type) {
    case WeightType::unit_dual_quaternion: return random_udq(rng);
    case WeightType::unit_complex: return random_unit_dual_complex(rng);
    case WeightType::dual_quaternion: {
      Quaternion direction;
      do {
        direction = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      } while (direction.norm() < 1e-6);
      const Quaternion s = direction.normalized() * scale(rng);
      return {s, {gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
    }
    case WeightType::complex: {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      const double a = angle(rng);
      const double r = scale(rng);
      return {{r * std::cos(a), r * std::sin(a), 0.0, 0.0}, {gauss(rng), gauss(rng), 0.0, 0.0}};
    }
    case WeightType::real: {
      std::bernoulli_distribution coin(0.5);
      const double r = scale(rng);
      return {Quaternion{coin(rng) ? r : -r}, Quaternion{gauss(rng)}};
    }
  }
  return DualQuaternion::identity();
}

WeightedDigraph from_potential(const Digraph& g, WeightType type, std::span<const DualQuaternion> theta,
                               std::span<const double> c) {
  if (theta.size() != static_cast<std::size_t>(g.vertex_count()) || c.size() != g.arc_count())
    throw Error(Errc::shape_mismatch, "potential does not match the graph");
  std::vector<WeightedArc> arcs;
  arcs.reserve(g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    const DualQuaternion& ti = theta[static_cast<std::size_t>(a.tail - 1)];
    const DualQuaternion& tj = theta[static_cast<std::size_t>(a.head - 1)];
    arcs.push_back({a.tail, a.head, weight_inverse(ti, type) * tj * c[e]});
  }
  return WeightedDigraph::build(g.vertex_count(), std::move(arcs), type);
}

WeightedDigraph gen_cycle(int n, WeightType type, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::invalid_argument, "a directed cycle needs n >= 3");
  std::vector<Arc> arcs;
  for (Vertex i = 1; i < n; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({n, 1});
  Rng rng(seed);
  return balanced_on(Digraph(n, std::move(arcs)), type, rng);
}

WeightedDigraph gen_tree(int n, WeightType type, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::invalid_argument, "a tree needs n >= 1");
  Rng rng(seed);
  std::vector<WeightedArc> arcs;
  for (const Arc& a : random_tree_arcs(n, false, rng)) arcs.push_back({a.tail, a.head, random_weight(type, rng)});
  return WeightedDigraph::build(n, std::move(arcs), type);
}

WeightedDigraph gen_random_balanced(int n, double arc_density, WeightType type, std::uint64_t seed,
                                    bool directed_spanning_tree) {
  if (n < 2) throw Error(Errc::invalid_argument, "random graphs need n >= 2");
  if (arc_density < 0.0) throw Error(Errc::invalid_argument, "negative arc density");
  Rng rng(seed);
  std::vector<Arc> arcs = random_tree_arcs(n, directed_spanning_tree, rng);
  std::set<Arc> present(arcs.begin(), arcs.end());
  const auto max_arcs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
  const auto extra = std::min(static_cast<std::size_t>(std::lround(arc_density * n)), max_arcs - arcs.size());
  std::uniform_int_distribution<Vertex> vertex(1, n);
  while (present.size() < arcs.size() + extra) {
    const Arc a{vertex(rng), vertex(rng)};
    if (a.tail != a.head) present.insert(a);
  }
  return balanced_on(Digraph(n, {present.begin(), present.end()}), type, rng);
}

WeightedDigraph perturb(const WeightedDigraph& g, Arc arc, std::uint64_t seed) {
  const auto e = g.graph().find_arc(arc.tail, arc.head);
  if (!e) throw Error(Errc::arc_not_found, "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")");
  Rng rng(seed);
  DualQuaternion w;
  do {
    w = random_weight(g.weight_type(), rng);
  } while (distance(w, g.weight(*e)) < 1e-3);
  return g.with_weight(*e, w);
}

std::optional<Arc> pick_cycle_arc(const WeightedDigraph& g, std::uint64_t seed) {
  std::vector<Arc> candidates;
  for (std::size_t e = 0; e < g.arc_count(); ++e)
    if (lies_on_cycle(g.graph(), e)) candidates.push_back(g.graph().arc(e));
  if (candidates.empty()) return std::nullopt;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

WeightedDigraph apply_switching(const WeightedDigraph& g, std::span<const DualQuaternion> zeta) {
  if (zeta.size() != static_cast<std::size_t>(g.vertex_count()))
    throw Error(Errc::shape_mismatch, "switching function does not match the graph");
  std::vector<WeightedArc> arcs = g.weighted_arcs();
  for (auto& a : arcs)
    a.weight = zeta[static_cast<std::size_t>(a.tail - 1)].inverse() * a.weight * zeta[static_cast<std::size_t>(a.head - 1)];
  return WeightedDigraph::build(g.vertex_count(), std::move(arcs), g.weight_type());
}

}  // namespace dqgraph
