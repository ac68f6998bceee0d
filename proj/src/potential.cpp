#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <deque>

#include "dqgraph/balance.hpp"

namespace dqgraph {

namespace {

/// theta(root) = 1 and theta propagated along a BFS forest; roots are taken in
/// increasing vertex order and incident arcs in ascending (tail, head) order.
/// Tree arcs get c = 1 by construction.
DQVector propagate_potential(const WeightedDigraph& g) {
  const Digraph& d = g.graph();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DQVector theta(n, DualQuaternion::identity());
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> incident;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> queue{static_cast<Vertex>(root + 1)};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      incident = d.out_arcs(v);
      incident.insert(incident.end(), d.in_arcs(v).begin(), d.in_arcs(v).end());
      std::sort(incident.begin(), incident.end());
      const DualQuaternion& tv = theta[static_cast<std::size_t>(v - 1)];
      for (std::size_t e : incident) {
        const Arc& a = d.arc(e);
        const bool forward = a.tail == v;
        const Vertex u = forward ? a.head : a.tail;
        auto& seen_u = seen[static_cast<std::size_t>(u - 1)];
        if (seen_u) continue;
        seen_u = 1;
        theta[static_cast<std::size_t>(u - 1)] =
            forward ? tv * g.weight(e) : tv * weight_inverse(g.weight(e), g.weight_type());
        queue.push_back(u);
      }
    }
  }
  return theta;
}

std::vector<double> fit_scales(const WeightedDigraph& g, const DQVector& theta) {
  std::vector<double> c(g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.graph().arc(e);
    c[e] = g.weight(e).s.norm() * theta[static_cast<std::size_t>(a.tail - 1)].s.norm() /
           theta[static_cast<std::size_t>(a.head - 1)].s.norm();
  }
  return c;
}

void require_invertible(const DQVector& theta) {
  for (const auto& t : theta)
    if (!t.is_appreciable()) throw Error(Errc::non_invertible_theta, "potential has a non-appreciable entry");
}

DQVector unit_null_vector(const DQVector& theta) {
  DQVector x(theta.size());
  std::transform(theta.begin(), theta.end(), x.begin(), [](const DualQuaternion& t) { return t.conj(); });
  return x;
}

}  // namespace

BalanceReport cycle_oracle(const WeightedDigraph& g, std::size_t max_cycles) {
  BalanceReport report;
  report.method = Method::cycle_oracle;
  const CycleEnumeration cycles = enumerate_cycles(g.graph(), max_cycles);
  if (cycles.truncated) {
    report.verdict = Verdict::indeterminate;
    report.detail = "cycle enumeration truncated at " + std::to_string(max_cycles) + " cycles";
    return report;
  }
  double worst = 0.0;
  const CycleWithOrientation* witness = nullptr;
  for (const auto& c : cycles.cycles) {
    const double defect = neutrality_defect(walk_weight(g, c), g.weight_type());
    if (defect > worst) {
      worst = defect;
      witness = &c;
    }
  }
  if (worst > kBalanceTol) {
    report.verdict = Verdict::unbalanced;
    report.failure_stage = FailureStage::cycle_found;
    report.witness = *witness;
    report.detail = "cycle product deviates from neutrality by " + std::to_string(worst);
    return report;
  }

  // Every cycle is neutral, so propagation along a spanning forest is a
  // certificate; Err is reported against it.
  PotentialAssignment p{propagate_potential(g), {}};
  p.c = fit_scales(g, p.theta);
  report.verdict = Verdict::balanced;
  if (is_unit_type(g.weight_type())) {
    report.null_vector = unit_null_vector(p.theta);
    report.err = similarity_residual(laplacian(g), *report.null_vector, unweighted_laplacian(g.graph()));
  } else {
    report.null_vector = inverse_potential_vector(p);
    report.err = wdg_similarity_check(g, p).err;
  }
  report.formation = std::move(p.theta);
  report.detail = std::to_string(cycles.cycles.size()) + (cycles.cycles.size() == 1 ? " cycle checked" : " cycles checked");
  return report;
}

double potential_misfit(const WeightedDigraph& g, const PotentialAssignment& p) {
  if (p.theta.size() != static_cast<std::size_t>(g.vertex_count()) || p.c.size() != g.arc_count())
    throw Error(Errc::shape_mismatch, "potential does not match the graph");
  double worst = 0.0;
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.graph().arc(e);
    const DualQuaternion& phi = g.weight(e);
    const DualQuaternion fit = p.theta[static_cast<std::size_t>(a.tail - 1)].inverse() *
                               p.theta[static_cast<std::size_t>(a.head - 1)] * p.c[e];
    worst = std::max(worst, distance(phi, fit) / std::max(1.0, phi.norm8()));
  }
  return worst;
}

std::optional<PotentialAssignment> build_potential(const WeightedDigraph& g, double tol) {
  if (!is_weakly_connected(g.graph())) throw Error(Errc::not_connected, "graph is not weakly connected");
  PotentialAssignment p{propagate_potential(g), {}};
  p.c = fit_scales(g, p.theta);
  if (potential_misfit(g, p) > tol) return std::nullopt;
  return p;
}

DQVector inverse_potential_vector(const PotentialAssignment& p) {
  require_invertible(p.theta);
  DQVector y(p.theta.size());
  std::transform(p.theta.begin(), p.theta.end(), y.begin(),
                 [](const DualQuaternion& t) { return t.inverse() * t.s.norm(); });
  return y;
}

SimilarityCheck wdg_similarity_check(const WeightedDigraph& g, const PotentialAssignment& p) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (p.theta.size() != n) throw Error(Errc::shape_mismatch, "potential does not match the graph");
  const DQVector y = inverse_potential_vector(p);
  DQVector y_inv(n);
  for (std::size_t i = 0; i < n; ++i) y_inv[i] = p.theta[i] * (1.0 / p.theta[i].s.norm());

  const DQMatrix l = laplacian(g);
  const RealMatrix reference = magnitude_laplacian(g);
  SimilarityCheck out;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double ref = reference(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (l(i, j) == DualQuaternion{}) {
        sum += ref * ref;
        continue;
      }
      const DualQuaternion diff = y_inv[i] * l(i, j) * y[j] - DualQuaternion(ref);
      sum += diff.s.norm2() + diff.d.norm2();
    }
  }
  out.err = std::sqrt(sum);
  out.null_residual = vector_norm(std::span<const DualQuaternion>(apply(l, std::span<const DualQuaternion>(y))));
  return out;
}

double right_eigenpair_residual(const WeightedDigraph& g, const PotentialAssignment& p) {
  const DQVector y = inverse_potential_vector(p);
  const DQMatrix l = laplacian(g);
  const Eigen::EigenSolver<RealMatrix> eig(magnitude_laplacian(g));
  const auto n = y.size();
  double worst = 0.0;
  DQVector z(n);
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const std::complex<double> lambda = eig.eigenvalues()(k);
    const DualQuaternion lam{Quaternion{lambda.real(), lambda.imag(), 0.0, 0.0}};
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> v = eig.eigenvectors()(static_cast<Eigen::Index>(i), k);
      z[i] = y[i] * DualQuaternion{Quaternion{v.real(), v.imag(), 0.0, 0.0}};
    }
    DQVector r = apply(l, std::span<const DualQuaternion>(z));
    for (std::size_t i = 0; i < n; ++i) r[i] -= z[i] * lam;
    worst = std::max(worst, vector_norm(std::span<const DualQuaternion>(r)));
  }
  return worst;
}

BalanceReport wdg_similarity_method(const WeightedDigraph& g) {
  BalanceReport report;
  report.method = Method::wdg_similarity;
  auto p = build_potential(g);
  if (!p) {
    report.verdict = Verdict::unbalanced;
    report.failure_stage = FailureStage::similarity_check;
    report.detail = "no potential function fits every arc";
    return report;
  }
  const SimilarityCheck check = wdg_similarity_check(g, *p);
  if (!(check.err <= kBalanceTol && check.null_residual <= kBalanceTol)) {
    report.verdict = Verdict::unbalanced;
    report.failure_stage = FailureStage::similarity_check;
    report.detail = "Err = " + std::to_string(check.err) + ", |L y| = " + std::to_string(check.null_residual);
    return report;
  }
  report.verdict = Verdict::balanced;
  report.err = check.err;
  report.null_vector = inverse_potential_vector(*p);
  report.formation = std::move(p->theta);
  return report;
}

}  // namespace dqgraph
