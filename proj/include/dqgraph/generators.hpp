#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dqgraph/graph.hpp"

namespace dqgraph {

/// Random member of the weight group of `type`. Unit types draw a random
/// rigid motion (restricted to the i axis for unit_complex); general types
/// draw a standard part of magnitude in [0.5, 2] and a Gaussian dual part.
DualQuaternion random_weight(WeightType type, Rng& rng);

/// Unit dual complex number: rotation about the i axis plus an i-axis translation.
UnitDualQuaternion random_unit_dual_complex(Rng& rng);

/// Weights phi(i, j) = theta(i)^-1 theta(j) c_ij for every arc of `g`
/// (c indexed by arc index). Balanced by construction.
WeightedDigraph from_potential(const Digraph& g, WeightType type, std::span<const DualQuaternion> theta,
                               std::span<const double> c);

/// Directed cycle (1,2), ..., (n-1,n), (n,1) with weights from a random
/// potential (c = 1 for unit types, c in [0.5, 2] otherwise). Requires n >= 3.
WeightedDigraph gen_cycle(int n, WeightType type, std::uint64_t seed);

/// Random labelled tree with random arc orientations and random weights.
WeightedDigraph gen_tree(int n, WeightType type, std::uint64_t seed);

/// Random spanning tree plus round(arc_density * n) extra arcs, weighted from
/// a random potential so the graph is balanced. With
/// `directed_spanning_tree`, tree arcs point towards vertex 1.
WeightedDigraph gen_random_balanced(int n, double arc_density, WeightType type, std::uint64_t seed,
                                    bool directed_spanning_tree = false);

/// Replace the weight of `arc` with a fresh random weight of the same type.
/// Throws Error(arc_not_found).
WeightedDigraph perturb(const WeightedDigraph& g, Arc arc, std::uint64_t seed);

/// An arc chosen at random among those lying on a cycle, if any.
std::optional<Arc> pick_cycle_arc(const WeightedDigraph& g, std::uint64_t seed);

/// phi^zeta(i, j) = zeta(i)^-1 phi(i, j) zeta(j). The result keeps the weight
/// type of `g` and is re-validated.
WeightedDigraph apply_switching(const WeightedDigraph& g, std::span<const DualQuaternion> zeta);

}  // namespace dqgraph
