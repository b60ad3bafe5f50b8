#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "zdg/closed_form.hpp"
#include "zdg/errors.hpp"
#include "zdg/numeric.hpp"

using namespace zdg;

namespace {

bool throws_with(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

GraphInstance two_isolated_vertices() {
  GraphInstance g;
  g.p = 2;
  g.c = 2;
  g.labels = {RingElement{{0, 1}}, RingElement{{0, 1}}};
  g.vertex_level = {1, 1};
  return g;
}

}  // namespace

TEST_CASE("matrix assembly invariants") {
  RingParams rp(3, 3);
  GraphInstance g = build_graph_by_rule(rp);
  auto adj = g.adjacency_lists();

  DenseSymmetricMatrix A = assemble_matrix(g, MatrixKind::Adjacency);
  REQUIRE(A.dim() == 8);
  CHECK((A.m - A.m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(A.m.diagonal().cwiseAbs().maxCoeff() == 0.0);
  for (int v = 0; v < 8; ++v)
    CHECK(A.m.row(v).sum() == static_cast<double>(adj[v].size()));

  DenseSymmetricMatrix L = assemble_matrix(g, MatrixKind::Laplacian);
  CHECK(L.m.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);

  DenseSymmetricMatrix S = assemble_matrix(g, MatrixKind::Signless);
  for (int v = 0; v < 8; ++v)
    CHECK(S.m.row(v).sum() == 2.0 * static_cast<double>(adj[v].size()));

  DenseSymmetricMatrix H = assemble_matrix(g, MatrixKind::AAlpha, Rat(1, 2));
  CHECK(((2.0 * H.m) - S.m).cwiseAbs().maxCoeff() == 0.0);

  DenseSymmetricMatrix DL = assemble_matrix(g, MatrixKind::DistanceLaplacian);
  CHECK(DL.m.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j) {
        CHECK(DL.m(i, j) <= -1.0);
        CHECK(DL.m(i, j) >= -2.0);
      }

  DenseSymmetricMatrix D = assemble_matrix(g, MatrixKind::Distance);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == j) {
        CHECK(D.m(i, j) == 0.0);
      } else {
        CHECK(D.m(i, j) >= 1.0);
        CHECK(D.m(i, j) <= 2.0);
      }
    }
}

TEST_CASE("assembly rejects bad inputs") {
  RingParams rp(3, 3);
  GraphInstance g = build_graph_by_rule(rp);
  CHECK(throws_with(ErrorCode::BudgetExceeded, [&] {
    assemble_matrix(g, MatrixKind::Adjacency, {}, 5);
  }));
  CHECK(throws_with(ErrorCode::InvalidArgument,
                    [&] { assemble_matrix(g, MatrixKind::AAlpha); }));
  CHECK(throws_with(ErrorCode::InvalidArgument,
                    [&] { assemble_matrix(g, MatrixKind::AAlpha, Rat(3, 2)); }));
  CHECK(throws_with(ErrorCode::InvalidArgument,
                    [&] { assemble_matrix(g, MatrixKind::Quotient); }));
  CHECK(throws_with(ErrorCode::Disconnected, [&] {
    assemble_matrix(two_isolated_vertices(), MatrixKind::Distance);
  }));
}

TEST_CASE("symmetric eigensolver on known matrices") {
  {
    Eigen::MatrixXd m(2, 2);
    m << 2, 1, 1, 2;
    EigenResult r = symmetric_eigensolve(wrap_symmetric(m, MatrixKind::Adjacency));
    REQUIRE(r.eigenvalues.size() == 2);
    CHECK(r.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.residual_bound < 1e-12);
    CHECK(r.matrix_norm == 3.0);
  }
  {
    // Laplacian of the path 0-1-2: eigenvalues 3, 1, 0.
    Eigen::MatrixXd m(3, 3);
    m << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    EigenResult r = symmetric_eigensolve(wrap_symmetric(m, MatrixKind::Laplacian));
    CHECK(r.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(r.eigenvalues[2]) < 1e-12);
  }
  {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 0, 0;  // not symmetric
    CHECK(throws_with(ErrorCode::InvalidArgument, [&] {
      symmetric_eigensolve(wrap_symmetric(m, MatrixKind::Adjacency));
    }));
  }
}

TEST_CASE("eigenvalue clustering") {
  std::vector<double> vals = {3.0, 2.0000001, 2.0, 1.0};
  auto clusters = cluster_eigenvalues(vals, 1e-5);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0] == std::pair<double, size_t>{3.0, 1});
  CHECK(clusters[1].second == 2);
  CHECK(clusters[1].first == doctest::Approx(2.00000005));
  CHECK(clusters[2] == std::pair<double, size_t>{1.0, 1});

  CHECK(cluster_eigenvalues({}, 1e-5).empty());
  CHECK(cluster_gap(10.0) == doctest::Approx(1e-5));
  CHECK(cluster_gap(0.5) == doctest::Approx(1e-6));  // max(1, norm) floor
}

TEST_CASE("spectrum_from_dense clusters repeated eigenvalues") {
  RingParams rp(2, 5);
  GraphInstance g = build_graph_by_rule(rp);
  EigenResult er = symmetric_eigensolve(assemble_matrix(g, MatrixKind::Laplacian));
  Spectrum s = spectrum_from_dense(er, MatrixKind::Laplacian);
  REQUIRE(s.entries.size() == 5);  // 15, 7, 3, 1, 0
  CHECK(s.entries[0].multiplicity == 1);
  CHECK(s.entries[1].multiplicity == 2);
  CHECK(s.entries[2].multiplicity == 3);
  CHECK(s.entries[3].multiplicity == 8);
  CHECK(s.entries[4].multiplicity == 1);
  CHECK(s.total_multiplicity == 15);
  for (const SpectrumEntry& e : s.entries) CHECK(e.is_numeric());
}

TEST_CASE("closed versus dense comparison passes on honest spectra") {
  for (auto [p, c] :
       std::vector<std::pair<int64_t, int64_t>>{{2, 5}, {2, 6}, {3, 4}, {5, 3}}) {
    CAPTURE(p);
    CAPTURE(c);
    RingParams rp(p, c);
    LevelPartition lp(rp);
    GraphInstance g = build_graph_by_rule(rp);
    Spectrum closed = laplacian_spectrum(lp);
    EigenResult dense = symmetric_eigensolve(assemble_matrix(g, MatrixKind::Laplacian));
    SpectrumComparison cmp = compare_spectra(closed, dense, 1e-8);
    CAPTURE(cmp.detail);
    CHECK(cmp.pass);
    CHECK(cmp.structural_ok);
    CHECK(cmp.max_deviation < 1e-8);
    CHECK(cmp.cluster_mismatches == 0);
  }
}

TEST_CASE("comparison flags corrupted closed spectra") {
  RingParams rp(2, 5);
  LevelPartition lp(rp);
  GraphInstance g = build_graph_by_rule(rp);
  EigenResult dense = symmetric_eigensolve(assemble_matrix(g, MatrixKind::Laplacian));

  {
    // Wrong value: shift one eigenvalue.
    Spectrum bad = laplacian_spectrum(lp);
    bad.entries[1].value = Int(std::get<Int>(bad.entries[1].value) + 1);
    SpectrumComparison cmp = compare_spectra(bad, dense, 1e-8);
    CHECK_FALSE(cmp.pass);
    CHECK(cmp.max_deviation > 0.5);
  }
  {
    // Wrong multiplicity split: total stays right, clusters disagree.
    Spectrum bad = laplacian_spectrum(lp);
    bad.entries[1].multiplicity -= 1;
    bad.entries[2].multiplicity += 1;
    SpectrumComparison cmp = compare_spectra(bad, dense, 1e-8);
    CHECK_FALSE(cmp.pass);
    CHECK(cmp.cluster_mismatches > 0);
  }
  {
    // Wrong total multiplicity: structurally broken.
    Spectrum bad = laplacian_spectrum(lp);
    bad.entries[1].multiplicity += 1;
    bad.total_multiplicity += 1;
    SpectrumComparison cmp = compare_spectra(bad, dense, 1e-8);
    CHECK_FALSE(cmp.pass);
    CHECK_FALSE(cmp.structural_ok);
  }
}

TEST_CASE("symmetrized quotient reproduces the quotient spectrum") {
  // Q itself is not symmetric; the similarity-scaled version must carry the
  // same eigenvalues as the closed-form tails.
  LevelPartition lp{RingParams(2, 6)};
  QuotientMatrices qm = build_quotient(lp);
  DenseSymmetricMatrix sym =
      symmetrized_quotient(qm, Rat(0), Rat(1), MatrixKind::Quotient);
  REQUIRE(sym.dim() == 5);
  CHECK((sym.m - sym.m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  EigenResult er = symmetric_eigensolve(sym);

  // Trace is preserved by the similarity.
  double trace = 0;
  for (double v : er.eigenvalues) trace += v;
  CHECK(trace == doctest::Approx(4.0).epsilon(1e-9));  // tr Q = 0+0+3+1+0

  // The adjacency spectrum's numeric tail equals these five eigenvalues.
  Spectrum adj = adjacency_spectrum(lp);
  std::vector<double> tail;
  for (const SpectrumEntry& e : adj.entries)
    if (e.is_numeric())
      for (Int r = 0; r < e.multiplicity; ++r) tail.push_back(e.evaluated());
  std::sort(tail.rbegin(), tail.rend());
  REQUIRE(tail.size() == 5);
  for (size_t i = 0; i < 5; ++i)
    CHECK(tail[i] == doctest::Approx(er.eigenvalues[i]).epsilon(1e-9));
}
