#include "zdg/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdio>
#include <queue>

#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"

namespace zdg {

namespace {

void check_budget(size_t n, uint64_t budget) {
  if (n > budget)
    fail(ErrorCode::BudgetExceeded,
         "dense path needs " + std::to_string(n) + " x " + std::to_string(n) +
             " storage; budget is " + std::to_string(budget) +
             " vertices (ZDG_DENSE_BUDGET overrides)");
}

Eigen::MatrixXd adjacency_dense(const GraphInstance& g) {
  const int n = static_cast<int>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Eigen::VectorXd degrees_of(const Eigen::MatrixXd& a) { return a.rowwise().sum(); }

Eigen::MatrixXd distance_dense(const GraphInstance& g) {
  const size_t n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (uint32_t s = 0; s < n; ++s) {
    std::vector<int32_t> dist = bfs_distances(adj, s);
    for (size_t v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        // Name the components so the error is actionable.
        std::vector<uint32_t> reps;
        std::vector<char> seen(n, 0);
        for (uint32_t w = 0; w < n; ++w) {
          if (seen[w]) continue;
          reps.push_back(w);
          std::vector<int32_t> dw = bfs_distances(adj, w);
          for (size_t x = 0; x < n; ++x)
            if (dw[x] >= 0) seen[x] = 1;
        }
        std::string msg = "distance matrix undefined: graph has " +
                          std::to_string(reps.size()) +
                          " components (representatives:";
        for (size_t i = 0; i < reps.size() && i < 8; ++i)
          msg += " " + std::to_string(reps[i]);
        msg += ")";
        fail(ErrorCode::Disconnected, msg);
      }
      d(s, v) = dist[v];
    }
  }
  return d;
}

}  // namespace

DenseSymmetricMatrix assemble_matrix(const GraphInstance& g, MatrixKind kind,
                                     std::optional<Rat> alpha, uint64_t budget) {
  check_budget(g.vertex_count(), budget);
  switch (kind) {
    case MatrixKind::Adjacency:
      return {adjacency_dense(g), kind, {}};
    case MatrixKind::Laplacian: {
      Eigen::MatrixXd a = adjacency_dense(g);
      Eigen::MatrixXd m = Eigen::MatrixXd(degrees_of(a).asDiagonal()) - a;
      return {std::move(m), kind, {}};
    }
    case MatrixKind::Signless: {
      Eigen::MatrixXd a = adjacency_dense(g);
      Eigen::MatrixXd m = Eigen::MatrixXd(degrees_of(a).asDiagonal()) + a;
      return {std::move(m), kind, {}};
    }
    case MatrixKind::AAlpha: {
      if (!alpha) fail(ErrorCode::InvalidArgument, "a-alpha matrix needs a value of alpha");
      if (*alpha < 0 || *alpha > 1)
        fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1], got " + to_string(*alpha));
      const double av = to_double(*alpha);
      Eigen::MatrixXd a = adjacency_dense(g);
      Eigen::MatrixXd m =
          av * Eigen::MatrixXd(degrees_of(a).asDiagonal()) + (1.0 - av) * a;
      return {std::move(m), kind, std::move(alpha)};
    }
    case MatrixKind::Distance:
      return {distance_dense(g), kind, {}};
    case MatrixKind::DistanceLaplacian: {
      Eigen::MatrixXd d = distance_dense(g);
      Eigen::MatrixXd m = Eigen::MatrixXd(d.rowwise().sum().asDiagonal()) - d;
      return {std::move(m), kind, {}};
    }
    case MatrixKind::Quotient:
      fail(ErrorCode::InvalidArgument,
           "quotient matrices are built from the level data, not the graph");
  }
  fail(ErrorCode::Internal, "unreachable");
}

DenseSymmetricMatrix wrap_symmetric(Eigen::MatrixXd m, MatrixKind kind,
                                    std::optional<Rat> alpha) {
  return {std::move(m), kind, std::move(alpha)};
}

EigenResult symmetric_eigensolve(const DenseSymmetricMatrix& M, double tol) {
  const int n = M.dim();
  if (n < 1) fail(ErrorCode::InvalidArgument, "empty matrix");
  if ((M.m - M.m.transpose()).cwiseAbs().maxCoeff() != 0.0)
    fail(ErrorCode::InvalidArgument, "matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.m);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NoConvergence, "symmetric eigensolver failed to converge");

  EigenResult r;
  r.dim = n;
  r.matrix_norm = M.m.cwiseAbs().rowwise().sum().maxCoeff();
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::reverse(r.eigenvalues.begin(), r.eigenvalues.end());

  Eigen::MatrixXd resid =
      M.m * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
  r.residual_bound = resid.colwise().norm().maxCoeff() / std::max(1.0, r.matrix_norm);
  if (!(r.residual_bound <= tol))
    fail(ErrorCode::NoConvergence,
         "eigensolve residual " + std::to_string(r.residual_bound) +
             " exceeds tolerance " + std::to_string(tol));
  return r;
}

double cluster_gap(double matrix_norm) { return 1e-6 * std::max(1.0, matrix_norm); }

std::vector<std::pair<double, size_t>> cluster_eigenvalues(
    const std::vector<double>& descending, double gap) {
  std::vector<std::pair<double, size_t>> out;
  size_t i = 0;
  while (i < descending.size()) {
    size_t j = i + 1;
    double sum = descending[i];
    while (j < descending.size() && descending[j - 1] - descending[j] <= gap) {
      sum += descending[j];
      ++j;
    }
    out.emplace_back(sum / double(j - i), j - i);
    i = j;
  }
  return out;
}

Spectrum spectrum_from_dense(const EigenResult& er, MatrixKind kind,
                             std::optional<Rat> alpha) {
  Spectrum spec;
  spec.kind = kind;
  spec.alpha = std::move(alpha);
  spec.total_multiplicity = er.dim;
  spec.residual_bound = er.residual_bound;
  for (auto [mean, count] : cluster_eigenvalues(er.eigenvalues, cluster_gap(er.matrix_norm))) {
    SpectrumEntry e;
    e.value = mean;
    e.multiplicity = Int(count);
    e.residual_bound = er.residual_bound;
    spec.entries.push_back(std::move(e));
  }
  spec.sort_entries();
  return spec;
}

SpectrumComparison compare_spectra(const Spectrum& closed, const EigenResult& dense,
                                   double tol) {
  SpectrumComparison cmp;
  cmp.gap = cluster_gap(dense.matrix_norm);
  std::vector<double> cv = closed.expanded();
  cmp.structural_ok = cv.size() == dense.eigenvalues.size();
  if (!cmp.structural_ok) {
    cmp.detail = "total multiplicity mismatch: closed form carries " +
                 std::to_string(cv.size()) + " eigenvalues, dense solve " +
                 std::to_string(dense.eigenvalues.size());
    return cmp;
  }
  for (size_t i = 0; i < cv.size(); ++i)
    cmp.max_deviation = std::max(cmp.max_deviation,
                                 std::abs(cv[i] - dense.eigenvalues[i]));

  // Per-cluster multiplicity agreement: bucket the dense eigenvalues, then
  // drop each closed-form entry into the nearest cluster and compare counts.
  auto clusters = cluster_eigenvalues(dense.eigenvalues, cmp.gap);
  std::vector<size_t> closed_counts(clusters.size(), 0);
  for (const auto& e : closed.entries) {
    double v = e.evaluated();
    size_t bestIdx = 0;
    double best = std::abs(v - clusters[0].first);
    for (size_t k = 1; k < clusters.size(); ++k) {
      double d = std::abs(v - clusters[k].first);
      if (d < best) {
        best = d;
        bestIdx = k;
      }
    }
    closed_counts[bestIdx] += e.multiplicity.convert_to<size_t>();
  }
  for (size_t k = 0; k < clusters.size(); ++k)
    if (closed_counts[k] != clusters[k].second) ++cmp.cluster_mismatches;

  cmp.pass = cmp.structural_ok && cmp.max_deviation <= tol && cmp.cluster_mismatches == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max deviation %.3e (tol %.1e), %zu clusters, %zu multiplicity mismatches",
                cmp.max_deviation, tol, clusters.size(), cmp.cluster_mismatches);
  cmp.detail = buf;
  return cmp;
}

}  // namespace zdg
