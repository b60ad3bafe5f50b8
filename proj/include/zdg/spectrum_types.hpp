#ifndef ZDG_SPECTRUM_TYPES_HPP
#define ZDG_SPECTRUM_TYPES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zdg/numbers.hpp"

namespace zdg {

enum class MatrixKind {
  Adjacency,
  Laplacian,
  Signless,
  AAlpha,
  Distance,
  DistanceLaplacian,
  Quotient,
};

std::string matrix_kind_name(MatrixKind k);

// slope * alpha + intercept, for spectra left symbolic in alpha.
struct AffineEigenvalue {
  Int slope;
  Int intercept;
  bool operator==(const AffineEigenvalue&) const = default;
};

struct SpectrumEntry {
  // Exact integer, exact rational, affine in alpha, or numeric.
  std::variant<Int, Rat, AffineEigenvalue, double> value;
  Int multiplicity;
  double residual_bound = 0.0;  // nonzero only for numeric entries

  bool is_exact() const {
    return std::holds_alternative<Int>(value) || std::holds_alternative<Rat>(value);
  }
  bool is_affine() const { return std::holds_alternative<AffineEigenvalue>(value); }
  bool is_numeric() const { return std::holds_alternative<double>(value); }

  // Double view; NaN for affine entries.
  double evaluated() const;

  // Canonical text: "15", "5/2", "7*alpha-1", "2.449489742783178".
  std::string value_string() const;
};

struct Spectrum {
  MatrixKind kind = MatrixKind::Adjacency;
  std::optional<Rat> alpha;      // set for A_alpha spectra
  std::vector<SpectrumEntry> entries;  // descending, ties by multiplicity
  Int total_multiplicity;
  double residual_bound = 0.0;   // max over numeric entries

  // Set when the quotient tail is left symbolic (A_alpha without a value
  // of alpha): the entries above omit symbolic_tail_dim eigenvalues, the
  // roots of B(alpha).
  bool symbolic_tail = false;
  int symbolic_tail_dim = 0;

  // Sorts entries descending by value, ties broken by larger multiplicity.
  // Affine entries order by (slope, intercept).
  void sort_entries();

  // Multiset of evaluated eigenvalues, repeated per multiplicity, sorted
  // descending. Throws Domain for symbolic spectra or oversized multisets.
  std::vector<double> expanded(size_t limit = 1u << 24) const;
};

}  // namespace zdg

#endif
