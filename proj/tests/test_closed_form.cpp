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

std::vector<std::vector<Int>> int_matrix(
    const std::vector<std::vector<int64_t>>& rows) {
  std::vector<std::vector<Int>> m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    m[i] = std::vector<Int>(rows[i].begin(), rows[i].end());
  return m;
}

// (value, multiplicity) pairs of the exact entries for easy comparison.
std::vector<std::pair<std::string, std::string>> exact_pairs(const Spectrum& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const SpectrumEntry& e : s.entries)
    out.emplace_back(e.value_string(), to_string(e.multiplicity));
  return out;
}

// Multiset equality of two expanded spectra within tol.
void check_expansions_close(const std::vector<double>& a,
                            const std::vector<double>& b, double tol) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  CHECK(worst <= tol);
}

}  // namespace

TEST_CASE("quotient matrices for p=2, c=6") {
  QuotientMatrices qm = build_quotient(LevelPartition{RingParams(2, 6)});
  REQUIRE(qm.dim == 5);
  CHECK(qm.dstar == std::vector<Int>{1, 3, 6, 14, 30});
  CHECK(qm.sizes == std::vector<Int>{16, 8, 4, 2, 1});
  CHECK(qm.q == int_matrix({{0, 0, 0, 0, 1},
                            {0, 0, 0, 2, 1},
                            {0, 0, 3, 2, 1},
                            {0, 8, 4, 1, 1},
                            {16, 8, 4, 2, 0}}));
  CHECK(qm.laplacian() == int_matrix({{1, 0, 0, 0, -1},
                                      {0, 3, 0, -2, -1},
                                      {0, 0, 3, -2, -1},
                                      {0, -8, -4, 13, -1},
                                      {-16, -8, -4, -2, 30}}));
  CHECK(qm.signless() == int_matrix({{1, 0, 0, 0, 1},
                                     {0, 3, 0, 2, 1},
                                     {0, 0, 9, 2, 1},
                                     {0, 8, 4, 15, 1},
                                     {16, 8, 4, 2, 30}}));
}

TEST_CASE("quotient matrices for p=2, c=5") {
  QuotientMatrices qm = build_quotient(LevelPartition{RingParams(2, 5)});
  REQUIRE(qm.dim == 4);
  CHECK(qm.dstar == std::vector<Int>{1, 3, 6, 14});
  CHECK(qm.sizes == std::vector<Int>{8, 4, 2, 1});
  CHECK(qm.q == int_matrix({{0, 0, 0, 1},
                            {0, 0, 2, 1},
                            {0, 4, 1, 1},
                            {8, 4, 2, 0}}));
}

TEST_CASE("B(alpha) at alpha=1/2 for p=2, c=5 matches the direct formula") {
  QuotientMatrices qm = build_quotient(LevelPartition{RingParams(2, 5)});
  auto b = qm.b_of_alpha(Rat(1, 2));
  // alpha d_i on the independent diagonal, alpha d_i + (1-alpha)(n_i - 1)
  // on clique diagonals, (1-alpha) n_j off-diagonal where i+j >= c.
  CHECK(b[0][0] == Rat(1, 2));
  CHECK(b[0][3] == Rat(1, 2));
  CHECK(b[1][1] == Rat(3, 2));
  CHECK(b[1][2] == Rat(1));
  CHECK(b[2][2] == Rat(7, 2));   // 6/2 + 1/2 * 1
  CHECK(b[3][3] == Rat(7));
  CHECK(b[3][0] == Rat(4));
  CHECK(b[2][0] == Rat(0));
}

TEST_CASE("Laplacian spectrum is exact and integral") {
  {
    Spectrum s = laplacian_spectrum(LevelPartition{RingParams(2, 6)});
    CHECK(exact_pairs(s) ==
          std::vector<std::pair<std::string, std::string>>{
              {"31", "1"}, {"15", "2"}, {"7", "3"}, {"3", "8"}, {"1", "16"}, {"0", "1"}});
    CHECK(s.total_multiplicity == 31);
    CHECK(s.residual_bound == 0.0);
    for (const SpectrumEntry& e : s.entries) CHECK(e.is_exact());
  }
  {
    Spectrum s = laplacian_spectrum(LevelPartition{RingParams(2, 5)});
    CHECK(exact_pairs(s) ==
          std::vector<std::pair<std::string, std::string>>{
              {"15", "1"}, {"7", "2"}, {"3", "3"}, {"1", "8"}, {"0", "1"}});
    CHECK(s.total_multiplicity == 15);
  }
  {
    // Special level s=1 for c=2,3: K_{p-1} and the p=3 path degenerate fine.
    Spectrum s = laplacian_spectrum(LevelPartition{RingParams(5, 2)});
    // K_4: 4^3, 0.
    CHECK(exact_pairs(s) == std::vector<std::pair<std::string, std::string>>{
                                {"4", "3"}, {"0", "1"}});
  }
}

TEST_CASE("distance Laplacian spectrum is the 2n - lambda transform") {
  Spectrum s = distance_laplacian_spectrum(LevelPartition{RingParams(2, 6)});
  CHECK(exact_pairs(s) ==
        std::vector<std::pair<std::string, std::string>>{
            {"61", "16"}, {"59", "8"}, {"55", "3"}, {"47", "2"}, {"31", "1"}, {"0", "1"}});
  // Trace = 2n(n-1) - 2m.
  Int trace = 0;
  for (const SpectrumEntry& e : s.entries) trace += std::get<Int>(e.value) * e.multiplicity;
  CHECK(trace == 2 * Int(31) * 30 - 2 * Int(61));
}

TEST_CASE("adjacency spectrum: fixed part plus quotient tail") {
  LevelPartition lp{RingParams(2, 6)};
  Spectrum s = adjacency_spectrum(lp);
  Int zeros = 0, minus_ones = 0, numeric = 0;
  for (const SpectrumEntry& e : s.entries) {
    if (e.is_numeric()) {
      numeric += e.multiplicity;
    } else if (std::get<Int>(e.value) == 0) {
      zeros += e.multiplicity;
    } else {
      CHECK(std::get<Int>(e.value) == -1);
      minus_ones += e.multiplicity;
    }
  }
  CHECK(zeros == 15 + 7);       // independent levels 1, 2
  CHECK(minus_ones == 3 + 1);   // clique levels 3, 4 (level 5 has n-1 = 0)
  CHECK(numeric == 5);          // quotient tail
  CHECK(s.total_multiplicity == 31);

  // Eigenvalues sum to zero (trace); numeric part carries tr(Q) = 4.
  double sum = 0;
  for (const SpectrumEntry& e : s.entries)
    sum += e.evaluated() * to_double(Rat(e.multiplicity));
  CHECK(std::fabs(sum) < 1e-9);
}

TEST_CASE("closed adjacency spectrum matches the dense eigensolve") {
  for (auto [p, c] :
       std::vector<std::pair<int64_t, int64_t>>{{2, 5}, {3, 3}, {3, 4}, {5, 3}}) {
    CAPTURE(p);
    CAPTURE(c);
    RingParams rp(p, c);
    LevelPartition lp(rp);
    GraphInstance g = build_graph_by_rule(rp);
    Spectrum closed = adjacency_spectrum(lp);
    EigenResult dense =
        symmetric_eigensolve(assemble_matrix(g, MatrixKind::Adjacency));
    check_expansions_close(closed.expanded(), dense.eigenvalues, 1e-8);
  }
}

TEST_CASE("signless Laplacian spectrum doubles the half-alpha spectrum") {
  for (auto [p, c] : std::vector<std::pair<int64_t, int64_t>>{{2, 6}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(c);
    LevelPartition lp{RingParams(p, c)};
    Spectrum signless = signless_laplacian_spectrum(lp);
    Spectrum half = a_alpha_spectrum(lp, Rat(1, 2));
    std::vector<double> doubled = half.expanded();
    for (double& v : doubled) v *= 2;
    check_expansions_close(signless.expanded(), doubled, 1e-8);
  }
}

TEST_CASE("signless fixed part uses p^i - 1 and p^i - 3") {
  Spectrum s = signless_laplacian_spectrum(LevelPartition{RingParams(2, 6)});
  std::vector<std::pair<std::string, std::string>> fixed;
  for (const SpectrumEntry& e : s.entries)
    if (e.is_exact()) fixed.emplace_back(e.value_string(), to_string(e.multiplicity));
  // Independent levels i=1,2: p^i - 1 = 1, 3; clique levels 3,4: p^i - 3 = 5, 13.
  CHECK(fixed == std::vector<std::pair<std::string, std::string>>{
                     {"13", "1"}, {"5", "3"}, {"3", "7"}, {"1", "15"}});
}

TEST_CASE("a-alpha spectrum at the endpoints") {
  RingParams rp(3, 4);
  LevelPartition lp(rp);
  GraphInstance g = build_graph_by_rule(rp);

  // alpha = 0 is the adjacency spectrum.
  check_expansions_close(a_alpha_spectrum(lp, Rat(0)).expanded(),
                         adjacency_spectrum(lp).expanded(), 1e-9);

  // alpha = 1 is the degree diagonal: eigenvalues are the degrees.
  std::vector<double> degrees;
  auto adj = g.adjacency_lists();
  for (const auto& nb : adj) degrees.push_back(static_cast<double>(nb.size()));
  std::sort(degrees.rbegin(), degrees.rend());
  check_expansions_close(a_alpha_spectrum(lp, Rat(1)).expanded(), degrees, 1e-9);
}

TEST_CASE("a-alpha spectrum against dense rebuilds at several alphas") {
  RingParams rp(3, 4);
  LevelPartition lp(rp);
  GraphInstance g = build_graph_by_rule(rp);
  for (const Rat& alpha : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)}) {
    CAPTURE(to_string(alpha));
    Spectrum closed = a_alpha_spectrum(lp, alpha);
    EigenResult dense =
        symmetric_eigensolve(assemble_matrix(g, MatrixKind::AAlpha, alpha));
    check_expansions_close(closed.expanded(), dense.eigenvalues, 1e-8);
  }
}

TEST_CASE("a-alpha validates its parameter") {
  LevelPartition lp{RingParams(2, 5)};
  CHECK(throws_with(ErrorCode::InvalidArgument,
                    [&] { a_alpha_spectrum(lp, Rat(3, 2)); }));
  CHECK(throws_with(ErrorCode::InvalidArgument,
                    [&] { a_alpha_spectrum(lp, Rat(-1, 4)); }));
}

TEST_CASE("symbolic a-alpha spectrum keeps the tail symbolic") {
  Spectrum s = a_alpha_spectrum(LevelPartition{RingParams(2, 6)}, std::nullopt);
  REQUIRE(s.symbolic_tail);
  CHECK(s.symbolic_tail_dim == 5);
  CHECK(exact_pairs(s) == std::vector<std::pair<std::string, std::string>>{
                              {"15*alpha-1", "1"},
                              {"7*alpha-1", "3"},
                              {"3*alpha", "7"},
                              {"alpha", "15"}});
  CHECK(s.total_multiplicity == 31);  // includes the symbolic tail dimension
  CHECK(throws_with(ErrorCode::Domain, [&] { s.expanded(); }));
  CHECK(throws_with(ErrorCode::Domain, [&] { graph_energy(s); }));
}

TEST_CASE("Laplacian quotient eigenvectors are exact") {
  struct Case {
    int64_t p, c, k;
    Rat scalar;
    std::vector<Rat> coords;
  };
  std::vector<Case> cases = {
      {2, 6, 1, Rat(7, 8), {Rat(-7, 8), 1, 1, 1, 0}},
      {2, 6, 2, Rat(1, 2), {0, Rat(-1, 2), 1, 0, 0}},
      {2, 6, 4, Rat(1, 6), {0, Rat(-1, 6), Rat(-1, 6), 1, 0}},
      {2, 6, 5, Rat(1, 30), {Rat(-1, 30), Rat(-1, 30), Rat(-1, 30), Rat(-1, 30), 1}},
      {2, 5, 4, Rat(1, 14), {Rat(-1, 14), Rat(-1, 14), Rat(-1, 14), 1}},
      {3, 5, 1, Rat(4, 9), {Rat(-4, 9), 1, 1, 0}},
      {3, 5, 3, Rat(1, 3), {0, Rat(-1, 3), 1, 0}},
  };
  for (const Case& tc : cases) {
    CAPTURE(tc.p);
    CAPTURE(tc.c);
    CAPTURE(tc.k);
    LevelPartition lp{RingParams(tc.p, tc.c)};
    LaplacianEigenvector v = laplacian_eigenvector(lp, static_cast<int>(tc.k));
    CHECK(v.eigenvalue == ipow(tc.p, tc.k) - 1);
    CHECK(v.scalar == tc.scalar);
    CHECK(v.coords == tc.coords);

    // Re-verify L* v = (p^k - 1) v with independent exact arithmetic.
    auto lstar = build_quotient(lp).laplacian();
    for (size_t i = 0; i < v.coords.size(); ++i) {
      Rat acc = 0;
      for (size_t j = 0; j < v.coords.size(); ++j)
        acc += Rat(lstar[i][j]) * v.coords[j];
      CHECK(acc == Rat(v.eigenvalue) * v.coords[i]);
    }
  }
}

TEST_CASE("Laplacian eigenvector rejects the special level and bad indices") {
  LevelPartition lp{RingParams(2, 6)};
  CHECK(throws_with(ErrorCode::Domain, [&] { laplacian_eigenvector(lp, 3); }));
  CHECK(throws_with(ErrorCode::Domain, [&] { laplacian_eigenvector(lp, 0); }));
  CHECK(throws_with(ErrorCode::Domain, [&] { laplacian_eigenvector(lp, 6); }));
}

TEST_CASE("exact characteristic polynomial evaluation") {
  auto m = int_matrix({{2, 1}, {1, 2}});
  CHECK(charpoly_eval_exact(m, 1) == 0);
  CHECK(charpoly_eval_exact(m, 3) == 0);
  CHECK(charpoly_eval_exact(m, 0) == 3);  // det(-M) = 4 - 1
  CHECK(charpoly_eval_exact(m, 5) == 8);  // (5-3)(5-1)

  for (auto [p, c] : std::vector<std::pair<int64_t, int64_t>>{{2, 6}, {3, 5}, {5, 4}}) {
    CAPTURE(p);
    CAPTURE(c);
    RingParams rp(p, c);
    auto lstar = build_quotient(LevelPartition{rp}).laplacian();
    CHECK(charpoly_eval_exact(lstar, 0) == 0);
    for (int k = 1; k <= rp.level_count(); ++k) {
      Int lam = ipow(p, k) - 1;
      if (k == rp.special_level()) {
        CHECK(charpoly_eval_exact(lstar, lam) != 0);
      } else {
        CHECK(charpoly_eval_exact(lstar, lam) == 0);
      }
    }
  }
}

TEST_CASE("fixed eigenvector basis spans the within-level eigenvectors") {
  RingParams rp(2, 6);
  GraphInstance g = build_graph_by_rule(rp);
  Rat alpha(1, 3);
  DenseSymmetricMatrix M = assemble_matrix(g, MatrixKind::AAlpha, alpha);
  LevelPartition lp(rp);
  for (int level : {1, 2, 3, 4}) {
    CAPTURE(level);
    auto basis = fixed_eigenvector_basis(g, level);
    const LevelInfo& li = lp.level(level);
    CHECK(Int(basis.size()) == li.size - 1);
    double theta =
        to_double(alpha * Rat(li.degree + (li.clique ? 1 : 0)) - (li.clique ? 1 : 0));
    for (const auto& v : basis) {
      Eigen::Map<const Eigen::VectorXd> vec(v.data(), static_cast<long>(v.size()));
      double resid = (M.m * vec - theta * vec).cwiseAbs().maxCoeff();
      CHECK(resid < 1e-9);
    }
  }
}

TEST_CASE("graph energy") {
  // K_4 (p=5, c=2): adjacency eigenvalues 3, -1, -1, -1.
  EnergyResult e = graph_energy(adjacency_spectrum(LevelPartition{RingParams(5, 2)}));
  CHECK(e.adjacency);
  CHECK(e.value == doctest::Approx(6.0).epsilon(1e-9));

  // K_2 (p=3, c=2): eigenvalues 1, -1.
  EnergyResult e2 = graph_energy(adjacency_spectrum(LevelPartition{RingParams(3, 2)}));
  CHECK(e2.value == doctest::Approx(2.0).epsilon(1e-9));

  EnergyResult l = graph_energy(laplacian_spectrum(LevelPartition{RingParams(3, 2)}));
  CHECK_FALSE(l.adjacency);
}

TEST_CASE("spectrum entries sort descending with multiplicity tiebreak") {
  Spectrum s;
  s.entries.push_back({Int(3), Int(2), 0.0});
  s.entries.push_back({Rat(7, 2), Int(1), 0.0});
  s.entries.push_back({Int(3), Int(5), 0.0});
  s.entries.push_back({4.0, Int(1), 0.0});
  s.sort_entries();
  CHECK(s.entries[0].value_string() == "4");
  CHECK(s.entries[1].value_string() == "7/2");
  CHECK(s.entries[2].multiplicity == 5);
  CHECK(s.entries[3].multiplicity == 2);
}

TEST_CASE("expansion repeats values by multiplicity") {
  Spectrum s = laplacian_spectrum(LevelPartition{RingParams(2, 4)});
  std::vector<double> x = s.expanded();
  REQUIRE(x.size() == 7);
  CHECK(x.front() == 7.0);
  CHECK(x.back() == 0.0);
  CHECK(std::is_sorted(x.rbegin(), x.rend()));
}

TEST_CASE("value strings") {
  CHECK(SpectrumEntry{Int(-15), 1, 0}.value_string() == "-15");
  CHECK(SpectrumEntry{Rat(5, 2), 1, 0}.value_string() == "5/2");
  CHECK(SpectrumEntry{AffineEigenvalue{7, -1}, 1, 0}.value_string() == "7*alpha-1");
  CHECK(SpectrumEntry{AffineEigenvalue{1, 0}, 1, 0}.value_string() == "alpha");
  CHECK(SpectrumEntry{AffineEigenvalue{3, 0}, 1, 0}.value_string() == "3*alpha");
  CHECK(SpectrumEntry{AffineEigenvalue{0, 2}, 1, 0}.value_string() == "2");
  CHECK(SpectrumEntry{AffineEigenvalue{2, 5}, 1, 0}.value_string() == "2*alpha+5");
}
