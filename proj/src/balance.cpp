#include "dqgraph/balance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace dqgraph {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::balanced: return "balanced";
    case Verdict::unbalanced: return "unbalanced";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::direct: return "direct";
    case Method::gain_graph: return "gain_graph";
    case Method::cycle_oracle: return "cycle_oracle";
    case Method::wdg_similarity: return "wdg_similarity";
  }
  return "unknown";
}

std::string_view to_string(FailureStage s) noexcept {
  switch (s) {
    case FailureStage::symmetry_check: return "symmetry_check";
    case FailureStage::standard_solve: return "standard_solve";
    case FailureStage::unit_check: return "unit_check";
    case FailureStage::dual_solve: return "dual_solve";
    case FailureStage::orthogonality_check: return "orthogonality_check";
    case FailureStage::similarity_check: return "similarity_check";
    case FailureStage::assumption_rank: return "assumption_rank";
    case FailureStage::cycle_found: return "cycle_found";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "direct") return Method::direct;
  if (name == "gain" || name == "gain_graph" || name == "ggm") return Method::gain_graph;
  if (name == "cycles" || name == "cycle_oracle") return Method::cycle_oracle;
  if (name == "potential" || name == "wdg_similarity") return Method::wdg_similarity;
  return std::nullopt;
}

std::optional<Arc> check_symmetry_pairs(const WeightedDigraph& g, double tol) {
  const Digraph& d = g.graph();
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    const Arc& a = d.arc(e);
    if (a.tail > a.head) continue;
    const auto back = d.find_arc(a.head, a.tail);
    if (back && distance(g.weight(e), g.weight(*back).conj()) > tol) return a;
  }
  return std::nullopt;
}

namespace {

/// L_s split into [L_1s | L_2s] with L_2s factored once for both stages.
class ReducedLaplacian {
 public:
  explicit ReducedLaplacian(const DQMatrix& l) : n_{l.rows()}, ls_{standard_part(l)}, ld_{dual_part(l)} {
    if (l.rows() != l.cols()) throw Error(Errc::shape_mismatch, "Laplacian must be square");
    if (n_ >= 2) lsq_.emplace(column_block(ls_, 1, n_ - 1));
  }

  StandardPartSolution solve_standard() const {
    StandardPartSolution out;
    out.x_s.assign(n_, Quaternion{});
    if (n_ == 0) return out;
    out.x_s[0] = Quaternion::identity();
    if (n_ == 1) {
      out.consistent = out.unit = out.rank_ok = true;
      return out;
    }
    QVector rhs(n_);
    for (std::size_t i = 0; i < n_; ++i) rhs[i] = -ls_(i, 0);
    const LeastSquaresSolution sol = lsq_->solve(rhs);
    std::copy(sol.x.begin(), sol.x.end(), out.x_s.begin() + 1);
    out.residual = sol.residual;
    out.consistent = sol.consistent;
    out.unit = std::all_of(out.x_s.begin(), out.x_s.end(),
                           [](const Quaternion& q) { return std::abs(q.norm() - 1.0) <= kBalanceTol; });
    // Full column rank of L_2s already gives rank(L_s) >= n - 1.
    const auto needed = static_cast<Eigen::Index>(4 * (n_ - 1));
    out.rank_ok = lsq_->real_rank() >= needed || rank(ls_) >= static_cast<int>(n_ - 1);
    return out;
  }

  DualPartSolution solve_dual(std::span<const Quaternion> x_s) const {
    if (x_s.size() != n_) throw Error(Errc::shape_mismatch, "x_s length differs from Laplacian size");
    DualPartSolution out;
    out.x_d.assign(n_, Quaternion{});
    if (n_ <= 1) {
      out.consistent = out.orthogonal = true;
      return out;
    }
    QVector rhs = apply(ld_, x_s);
    for (auto& q : rhs) q = -q;
    const LeastSquaresSolution sol = lsq_->solve(rhs);
    std::copy(sol.x.begin(), sol.x.end(), out.x_d.begin() + 1);
    out.residual = sol.residual;
    out.consistent = sol.consistent;
    out.orthogonal = true;
    for (std::size_t j = 0; j < n_; ++j)
      if (2.0 * std::abs(dot(x_s[j], out.x_d[j])) > kBalanceTol) out.orthogonal = false;
    return out;
  }

 private:
  std::size_t n_;
  QMatrix ls_;
  QMatrix ld_;
  std::optional<QuaternionLeastSquares> lsq_;
};

BalanceReport fail(BalanceReport r, Verdict v, FailureStage stage, std::string detail) {
  r.verdict = v;
  r.failure_stage = stage;
  r.detail = std::move(detail);
  return r;
}

/// Step 3 of both the direct and the gain-graph method.
BalanceReport staged_null_solve(BalanceReport report, const DQMatrix& l, const RealMatrix& reference) {
  const ReducedLaplacian reduced(l);
  const StandardPartSolution st = reduced.solve_standard();
  if (!st.rank_ok)
    return fail(std::move(report), Verdict::indeterminate, FailureStage::assumption_rank, "rank(L_s) < n - 1");
  if (!st.consistent)
    return fail(std::move(report), Verdict::unbalanced, FailureStage::standard_solve,
                "reduced standard system inconsistent, residual " + std::to_string(st.residual));
  if (!st.unit) return fail(std::move(report), Verdict::unbalanced, FailureStage::unit_check, "x_s has a non-unit entry");

  const DualPartSolution du = reduced.solve_dual(st.x_s);
  if (!du.consistent)
    return fail(std::move(report), Verdict::unbalanced, FailureStage::dual_solve,
                "reduced dual system inconsistent, residual " + std::to_string(du.residual));
  if (!du.orthogonal)
    return fail(std::move(report), Verdict::unbalanced, FailureStage::orthogonality_check,
                "x_s x_d* + x_d x_s* != 0");

  DQVector x(l.rows());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = {st.x_s[j], du.x_d[j]};
  const double err = similarity_residual(l, x, reference);
  if (!(err <= kBalanceTol))
    return fail(std::move(report), Verdict::unbalanced, FailureStage::similarity_check,
                "Err = " + std::to_string(err));

  DQVector formation(x.size());
  std::transform(x.begin(), x.end(), formation.begin(), [](const DualQuaternion& q) { return q.conj(); });
  report.verdict = Verdict::balanced;
  report.formation = std::move(formation);
  report.null_vector = std::move(x);
  report.err = err;
  return report;
}

void require_unit_connected(const WeightedDigraph& g) {
  if (!is_unit_type(g.weight_type()))
    throw Error(Errc::not_unit_weight_type, std::string(to_string(g.weight_type())) + " graph is not unit weighted");
  if (!is_weakly_connected(g.graph())) throw Error(Errc::not_connected, "graph is not weakly connected");
}

std::string arc_text(const Arc& a) { return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")"; }

}  // namespace

StandardPartSolution solve_standard_part(const DQMatrix& l) { return ReducedLaplacian(l).solve_standard(); }

DualPartSolution solve_dual_part(const DQMatrix& l, std::span<const Quaternion> x_s) {
  return ReducedLaplacian(l).solve_dual(x_s);
}

double similarity_residual(const DQMatrix& l, std::span<const DualQuaternion> x, const RealMatrix& reference) {
  const std::size_t n = l.rows();
  if (l.cols() != n || x.size() != n || static_cast<std::size_t>(reference.rows()) != n ||
      static_cast<std::size_t>(reference.cols()) != n)
    throw Error(Errc::shape_mismatch, "similarity residual operands differ in size");
  DQVector xc(n);
  std::transform(x.begin(), x.end(), xc.begin(), [](const DualQuaternion& q) { return q.conj(); });
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const DualQuaternion& lij = l(i, j);
      const double ref = reference(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (lij == DualQuaternion{}) {
        sum += ref * ref;
        continue;
      }
      const DualQuaternion diff = xc[i] * lij * x[j] - DualQuaternion(ref);
      sum += diff.s.norm2() + diff.d.norm2();
    }
  }
  return std::sqrt(sum);
}

BalanceReport direct_method(const WeightedDigraph& g) {
  require_unit_connected(g);
  BalanceReport report;
  report.method = Method::direct;
  if (const auto bad = check_symmetry_pairs(g))
    return fail(std::move(report), Verdict::unbalanced, FailureStage::symmetry_check,
                "phi" + arc_text(*bad) + " != phi" + arc_text({bad->head, bad->tail}) + "*");
  return staged_null_solve(std::move(report), laplacian(g), unweighted_laplacian(g.graph()));
}

WeightedDigraph gain_graph_of(const WeightedDigraph& g) {
  std::vector<WeightedArc> arcs;
  const Digraph& d = g.graph();
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    const Arc& a = d.arc(e);
    if (a.tail > a.head && d.has_arc(a.head, a.tail)) continue;
    arcs.push_back({a.tail, a.head, g.weight(e)});
    arcs.push_back({a.head, a.tail, weight_inverse(g.weight(e), g.weight_type())});
  }
  return WeightedDigraph::build(g.vertex_count(), std::move(arcs), g.weight_type());
}

BalanceReport gain_graph_method(const WeightedDigraph& g) {
  require_unit_connected(g);
  BalanceReport report;
  report.method = Method::gain_graph;
  if (const auto bad = check_symmetry_pairs(g))
    return fail(std::move(report), Verdict::unbalanced, FailureStage::symmetry_check,
                "phi" + arc_text(*bad) + " != phi" + arc_text({bad->head, bad->tail}) + "*");
  const WeightedDigraph g1 = gain_graph_of(g);
  return staged_null_solve(std::move(report), laplacian(g1), unweighted_laplacian(g1.graph()));
}

double neutrality_defect(const DualQuaternion& p, WeightType type) {
  if (is_unit_type(type)) return distance(p, DualQuaternion::identity());
  const double scale = p.s.norm();
  return distance(p, DualQuaternion(scale)) / std::max(1.0, scale);
}

double formation_residual(const WeightedDigraph& g, std::span<const DualQuaternion> q) {
  if (q.size() != static_cast<std::size_t>(g.vertex_count()))
    throw Error(Errc::shape_mismatch, "formation length differs from vertex count");
  double worst = 0.0;
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.graph().arc(e);
    const DualQuaternion rel = q[static_cast<std::size_t>(a.tail - 1)].conj() * q[static_cast<std::size_t>(a.head - 1)];
    worst = std::max(worst, distance(g.weight(e), rel));
  }
  return worst;
}

BalanceReport check_balance(const WeightedDigraph& g, Method method) {
  const auto start = std::chrono::steady_clock::now();
  BalanceReport report;
  switch (method) {
    case Method::direct: report = direct_method(g); break;
    case Method::gain_graph: report = gain_graph_method(g); break;
    case Method::cycle_oracle: report = cycle_oracle(g); break;
    case Method::wdg_similarity: report = wdg_similarity_method(g); break;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dqgraph
