#ifndef ZDG_NUMERIC_HPP
#define ZDG_NUMERIC_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>

#include "zdg/spectrum_types.hpp"
#include "zdg/structure.hpp"

namespace zdg {

// Default cap on dense matrix work (assembly and eigensolve); the CLI can
// raise or lower it through ZDG_DENSE_BUDGET.
inline constexpr uint64_t kDenseBudgetDefault = 4000;

struct DenseSymmetricMatrix {
  Eigen::MatrixXd m;
  MatrixKind kind = MatrixKind::Adjacency;
  std::optional<Rat> alpha;

  int dim() const { return static_cast<int>(m.rows()); }
};

// Builds the requested matrix from an explicit graph: adjacency, Laplacian
// D - A, signless D + A, A_alpha = alpha D + (1-alpha) A, BFS distance
// matrix, or distance Laplacian Tr - Dist. Distance kinds require a
// connected graph (the error names components). The budget caps the
// dimension.
DenseSymmetricMatrix assemble_matrix(const GraphInstance& g, MatrixKind kind,
                                     std::optional<Rat> alpha = {},
                                     uint64_t budget = kDenseBudgetDefault);

// Wraps an externally built symmetric matrix (quotient tails).
DenseSymmetricMatrix wrap_symmetric(Eigen::MatrixXd m, MatrixKind kind,
                                    std::optional<Rat> alpha = {});

struct EigenResult {
  int dim = 0;
  std::vector<double> eigenvalues;  // descending
  double residual_bound = 0.0;      // max_i |M v_i - l_i v_i| / max(1, |M|_inf)
  double matrix_norm = 0.0;         // |M|_inf
};

// Dense symmetric eigensolve (tridiagonalization + implicit QL via Eigen).
// The residual bound is recomputed here from the eigenpairs; residuals above
// tol are reported as no-convergence.
EigenResult symmetric_eigensolve(const DenseSymmetricMatrix& M, double tol = 1e-8);

// Multiplicity cluster gap used everywhere: 1e-6 * max(1, |M|).
double cluster_gap(double matrix_norm);

// Clusters sorted-descending eigenvalues whose neighbours differ by at most
// the gap; returns (mean, count) pairs, descending.
std::vector<std::pair<double, size_t>> cluster_eigenvalues(
    const std::vector<double>& descending, double gap);

// Dense result folded into a Spectrum (numeric entries, clustered).
Spectrum spectrum_from_dense(const EigenResult& er, MatrixKind kind,
                             std::optional<Rat> alpha = {});

struct SpectrumComparison {
  bool pass = false;
  bool structural_ok = false;   // total multiplicities agree
  double max_deviation = 0.0;   // after sorting both sides descending
  double gap = 0.0;
  size_t cluster_mismatches = 0;
  std::string detail;
};

// Greedy index-wise comparison of a closed-form spectrum against a dense
// eigensolve, plus per-cluster multiplicity agreement.
SpectrumComparison compare_spectra(const Spectrum& closed, const EigenResult& dense,
                                   double tol);

}  // namespace zdg

#endif
