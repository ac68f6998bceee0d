#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqgraph/graph.hpp"
#include "dqgraph/qmatrix.hpp"

namespace dqgraph {

enum class Verdict { balanced, unbalanced, indeterminate };
enum class Method { direct, gain_graph, cycle_oracle, wdg_similarity };
enum class FailureStage {
  symmetry_check,
  standard_solve,
  unit_check,
  dual_solve,
  orthogonality_check,
  similarity_check,
  assumption_rank,
  cycle_found,
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(FailureStage s) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct BalanceReport {
  Verdict verdict{Verdict::indeterminate};
  Method method{Method::direct};
  /// Desired formation q_d with phi(i, j) = q_d(i)* q_d(j) on unit graphs, or
  /// the potential theta on general graphs.
  std::optional<DQVector> formation;
  /// Null vector of the Laplacian the certificate was checked against
  /// (x with L x = 0 for the direct / gain-graph methods, y = theta^-1 |theta_s| otherwise).
  std::optional<DQVector> null_vector;
  /// Similarity residual of the certificate; present when verdict is balanced.
  std::optional<double> err;
  std::optional<FailureStage> failure_stage;
  std::optional<CycleWithOrientation> witness;
  /// Wall time of the check itself, excluding graph construction.
  double seconds{0.0};
  std::string detail;
};

/// First antiparallel pair (i, j), (j, i) with |phi(i, j) - phi(j, i)*| > tol.
std::optional<Arc> check_symmetry_pairs(const WeightedDigraph& g, double tol = kBalanceTol);

struct StandardPartSolution {
  QVector x_s;            // [1; x_2s]
  double residual{0.0};   // of L_2s x_2s = -L_1s
  bool consistent{false};
  bool unit{false};       // | |x_sj| - 1 | <= kBalanceTol for every j
  bool rank_ok{false};    // rank(L_s) >= n - 1
};

struct DualPartSolution {
  QVector x_d;            // [0; x_2d]
  double residual{0.0};   // of L_2s x_2d = -L_d x_s
  bool consistent{false};
  bool orthogonal{false}; // |x_sj x_dj* + x_dj x_sj*| <= kBalanceTol for every j
};

/// Fixes x_1s = 1 and solves the reduced system L_2s x_2s = -L_1s.
StandardPartSolution solve_standard_part(const DQMatrix& laplacian);
/// Fixes x_1d = 0 and solves L_2s x_2d = -L_d x_s.
DualPartSolution solve_dual_part(const DQMatrix& laplacian, std::span<const Quaternion> x_s);

/// Err = | Q L Q* - L_ref |_FR with Q = diag(conj(x)).
double similarity_residual(const DQMatrix& laplacian, std::span<const DualQuaternion> x, const RealMatrix& reference);

/// Three-step direct method on a weakly connected unit-weighted graph.
/// Throws Error(not_connected) / Error(not_unit_weight_type).
BalanceReport direct_method(const WeightedDigraph& g);

/// The bidirected unit gain graph with phi_1(j, i) = phi(i, j)^-1. For an
/// antiparallel pair the arc with the smaller tail keeps its weight and the
/// other gets its inverse, so the Laplacian is exactly Hermitian.
WeightedDigraph gain_graph_of(const WeightedDigraph& g);

/// Gain-graph method: symmetry check, then the staged null solve on the
/// Hermitian Laplacian of gain_graph_of(g).
BalanceReport gain_graph_method(const WeightedDigraph& g);

/// Balance by enumerating every simple cycle: unit graphs need each oriented
/// product to be 1, general graphs a positive real dual number. Indeterminate
/// when enumeration was truncated.
BalanceReport cycle_oracle(const WeightedDigraph& g, std::size_t max_cycles = kDefaultMaxCycles);

/// Deviation of a cycle product from neutrality: |p - 1| for unit weight
/// types, otherwise the size of everything but a positive real scalar
/// (relative to max(1, |p_s|)).
double neutrality_defect(const DualQuaternion& product, WeightType type);

/// phi(i, j) = theta(i)^-1 theta(j) c_ij with c_ij > 0.
struct PotentialAssignment {
  DQVector theta;          // indexed by vertex - 1
  std::vector<double> c;   // indexed by arc index
};

/// theta by propagation along a BFS tree rooted at vertex 1, then every arc
/// verified with c_ij = |phi_s(i, j)| |theta_s(i)| / |theta_s(j)|.
/// Returns nullopt when some arc does not fit. Throws Error(not_connected).
std::optional<PotentialAssignment> build_potential(const WeightedDigraph& g, double tol = kBalanceTol);

/// Largest relative misfit max |phi(i, j) - theta(i)^-1 theta(j) c_ij| / max(1, |phi(i, j)|).
double potential_misfit(const WeightedDigraph& g, const PotentialAssignment& p);

/// y_i = theta(i)^-1 |theta_s(i)|.
DQVector inverse_potential_vector(const PotentialAssignment& p);

struct SimilarityCheck {
  double err{0.0};            // | Y^-1 L Y - (D - A) |_FR,  a_ij = |phi_s(i, j)|
  double null_residual{0.0};  // | L y |
};

/// Throws Error(non_invertible_theta) if some theta(i) is not appreciable.
SimilarityCheck wdg_similarity_check(const WeightedDigraph& g, const PotentialAssignment& p);

/// Largest |L (Y x) - (Y x) lambda| over the eigenpairs (lambda, x) of the
/// real matrix D - A, with complex numbers embedded on the i axis.
double right_eigenpair_residual(const WeightedDigraph& g, const PotentialAssignment& p);

/// Verdict from build_potential + wdg_similarity_check.
BalanceReport wdg_similarity_method(const WeightedDigraph& g);

/// max over arcs |phi(i, j) - q(i)* q(j)|.
double formation_residual(const WeightedDigraph& g, std::span<const DualQuaternion> formation);

/// Dispatches to one method and times it.
BalanceReport check_balance(const WeightedDigraph& g, Method method);

}  // namespace dqgraph
