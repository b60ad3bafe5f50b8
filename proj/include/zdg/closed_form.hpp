#ifndef ZDG_CLOSED_FORM_HPP
#define ZDG_CLOSED_FORM_HPP

#include <optional>
#include <vector>

#include "zdg/numeric.hpp"
#include "zdg/spectrum_types.hpp"
#include "zdg/structure.hpp"

namespace zdg {

// Equitable-partition quotient data on the levels, dimension c-1.
// Q_ij is the number of neighbours a V_i vertex has in V_j:
//   Q_ii = n_i - 1 when V_i is a clique, 0 otherwise;
//   Q_ij = n_j when i != j and i + j >= c, 0 otherwise.
// D* = diag(d_1, ..., d_{c-1}).
struct QuotientMatrices {
  int dim = 0;
  std::vector<Int> dstar;
  std::vector<std::vector<Int>> q;
  std::vector<Int> sizes;  // n_i, for the symmetrizing similarity

  std::vector<std::vector<Int>> laplacian() const;  // D* - Q
  std::vector<std::vector<Int>> signless() const;   // D* + Q
  // B(alpha) = alpha D* + (1-alpha) Q, exact.
  std::vector<std::vector<Rat>> b_of_alpha(const Rat& alpha) const;
};

QuotientMatrices build_quotient(const LevelPartition& lp);

// Q, D*+Q and B(alpha) are not symmetric, but scaling by diag(sqrt n_i) is a
// similarity onto a symmetric matrix (B_ij n_i = B_ji n_j), so their spectra
// are reachable with the symmetric solver. offset/scale express
// M = scale * (alpha D* + (1-alpha) Q) forms uniformly.
DenseSymmetricMatrix symmetrized_quotient(const QuotientMatrices& qm,
                                          const Rat& alpha_weight,
                                          const Rat& q_weight, MatrixKind kind,
                                          std::optional<Rat> alpha = {});

// A_alpha spectrum. With alpha set: exact fixed part
//   alpha (p^i - 1) - [V_i clique], multiplicity n_i - 1,
// plus the c-1 eigenvalues of B(alpha) solved numerically. Without alpha the
// fixed part is affine and the quotient tail stays symbolic.
Spectrum a_alpha_spectrum(const LevelPartition& lp, const QuotientMatrices& qm,
                          const std::optional<Rat>& alpha);
Spectrum a_alpha_spectrum(const LevelPartition& lp, const std::optional<Rat>& alpha);

// alpha = 0 specialization: 0 on independent levels, -1 on clique levels,
// plus the eigenvalues of Q.
Spectrum adjacency_spectrum(const LevelPartition& lp, const QuotientMatrices& qm);
Spectrum adjacency_spectrum(const LevelPartition& lp);

// p^i - 1 on independent levels, p^i - 3 on clique levels, plus D* + Q.
Spectrum signless_laplacian_spectrum(const LevelPartition& lp,
                                     const QuotientMatrices& qm);
Spectrum signless_laplacian_spectrum(const LevelPartition& lp);

// Exact integers end to end: {0} u {p^i - 1 with multiplicity n_i, i != s}
// u {p^s - 1 with multiplicity n_s - 1}, s = floor(c/2).
Spectrum laplacian_spectrum(const LevelPartition& lp);

// Diameter <= 2 transform: {0} u {2n - lambda : lambda nonzero Laplacian
// eigenvalue, same multiplicity}.
Spectrum distance_laplacian_spectrum(const LevelPartition& lp);

// Exact rational eigenvector of the Laplacian quotient L* = D* - Q for the
// eigenvalue p^k - 1, k != s:
//   k < s: -G_k at position k, 1 on positions k+1 .. c-1-k, 0 elsewhere,
//          G_k = (1 - p^(2k-c+1)) / (p - 1);
//   k > s: -d_k on positions c-k .. k-1, 1 at position k, 0 elsewhere,
//          d_k = (p - 1) / (p^(2k-c+1) - p).
// The construction verifies L* v = (p^k - 1) v exactly before returning.
struct LaplacianEigenvector {
  int k = 0;
  Int eigenvalue;
  Rat scalar;               // G_k or d_k
  std::vector<Rat> coords;  // length c-1, positions 1-based level indices
};
LaplacianEigenvector laplacian_eigenvector(const LevelPartition& lp, int k);

// Sum of |eigenvalue| * multiplicity. Defined for adjacency spectra; other
// kinds are computed but flagged.
struct EnergyResult {
  double value = 0.0;
  bool adjacency = false;
};
EnergyResult graph_energy(const Spectrum& spec);

// For a level with n_i >= 2: the n_i - 1 vectors e_{v_1} - e_{v_j} on the
// explicit graph, A_alpha eigenvectors for alpha(p^i - 1) - [clique].
std::vector<std::vector<double>> fixed_eigenvector_basis(const GraphInstance& g,
                                                         int level);

// det(lambda I - M) by fraction-free (Bareiss) elimination, exact.
Int charpoly_eval_exact(const std::vector<std::vector<Int>>& m, const Int& lambda);

}  // namespace zdg

#endif
