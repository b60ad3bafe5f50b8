#include "zdg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "zdg/closed_form.hpp"
#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"

namespace zdg {

namespace {

std::string dev_string(double dev) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", dev);
  return buf;
}

struct Checker {
  VerifyReport& report;

  void add(const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, detail});
  }
};

// Exact sum of an all-exact spectrum (Laplacian, distance Laplacian).
Rat exact_sum(const Spectrum& s) {
  Rat acc = 0;
  for (const auto& e : s.entries) {
    if (const Int* v = std::get_if<Int>(&e.value))
      acc += Rat(*v) * Rat(e.multiplicity);
    else if (const Rat* v = std::get_if<Rat>(&e.value))
      acc += *v * Rat(e.multiplicity);
    else
      fail(ErrorCode::Internal, "exact_sum on a non-exact spectrum");
  }
  return acc;
}

// Splits a mixed spectrum into (exact part sum, numeric part sum).
std::pair<Rat, double> split_sums(const Spectrum& s) {
  Rat exact = 0;
  double numeric = 0;
  for (const auto& e : s.entries) {
    if (const Int* v = std::get_if<Int>(&e.value))
      exact += Rat(*v) * Rat(e.multiplicity);
    else if (const Rat* v = std::get_if<Rat>(&e.value))
      exact += *v * Rat(e.multiplicity);
    else if (const double* v = std::get_if<double>(&e.value))
      numeric += *v * to_double(e.multiplicity);
  }
  return {exact, numeric};
}

Int trace_of(const std::vector<std::vector<Int>>& m) {
  Int t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

VerifyReport run_verification(const RingParams& rp, const VerifyOptions& opt) {
  const LevelPartition lp(rp);
  VerifyReport report;
  report.p = rp.p();
  report.c = rp.c();
  report.order = rp.graph_order();
  report.fault = opt.fault == Fault::CorruptQuotient ? "corrupt-quotient" : "none";
  Checker ck{report};

  if (rp.graph_order() > Int(opt.dense_budget))
    fail(ErrorCode::BudgetExceeded,
         "verification needs the dense route; order " + to_string(rp.graph_order()) +
             " exceeds the dense budget " + std::to_string(opt.dense_budget));

  QuotientMatrices qm = build_quotient(lp);
  if (opt.fault == Fault::CorruptQuotient) {
    // One wrong entry in the quotient; equitability and the quotient-driven
    // spectra must notice it downstream.
    qm.q[0][qm.dim - 1] += 1;
  }

  // Dual-route graph construction.
  GraphInstance by_rule = build_graph_by_rule(rp);
  GraphInstance by_ring = build_graph_by_ring(rp);
  {
    bool same = by_rule.edges == by_ring.edges &&
                by_rule.vertex_level == by_ring.vertex_level &&
                by_rule.labels == by_ring.labels;
    ck.add("graph-oracle-equivalence", same,
           same ? std::to_string(by_rule.edge_count()) +
                      " edges agree between the level rule and ring multiplication"
                : "edge sets differ between the level rule and ring multiplication");
  }
  const GraphInstance& g = by_rule;
  const size_t n = g.vertex_count();

  // Per-vertex degrees against the closed form.
  {
    std::vector<Int> want;
    for (const LevelInfo& li : lp.levels()) want.push_back(li.degree);
    std::vector<size_t> deg(n, 0);
    for (auto [u, v] : g.edges) {
      ++deg[u];
      ++deg[v];
    }
    size_t bad = 0;
    for (size_t v = 0; v < n; ++v)
      if (Int(deg[v]) != want[g.vertex_level[v] - 1]) ++bad;
    ck.add("vertex-degrees", bad == 0,
           bad == 0 ? "every vertex matches d_i = p^i - 1 - [2i >= c]"
                    : std::to_string(bad) + " vertices deviate from d_i");
  }

  // Handshake: 2|E| = sum n_i d_i.
  {
    Int rhs = 0;
    for (const LevelInfo& li : lp.levels()) rhs += li.size * li.degree;
    bool ok = Int(2) * Int(g.edge_count()) == rhs;
    ck.add("handshake", ok,
           "2|E| = " + std::to_string(2 * g.edge_count()) + ", sum n_i d_i = " + to_string(rhs));
  }

  // Equitability: every vertex of V_i sees exactly Q_ij neighbours in V_j.
  {
    const auto adj = g.adjacency_lists();
    size_t bad = 0;
    std::vector<Int> counts(static_cast<size_t>(qm.dim));
    for (size_t v = 0; v < n && bad == 0; ++v) {
      std::fill(counts.begin(), counts.end(), Int(0));
      for (uint32_t w : adj[v]) counts[g.vertex_level[w] - 1] += 1;
      for (int j = 0; j < qm.dim; ++j) {
        if (counts[j] != qm.q[g.vertex_level[v] - 1][j]) {
          ++bad;
          break;
        }
      }
    }
    ck.add("equitable-partition", bad == 0,
           bad == 0 ? "neighbour counts match the quotient matrix row for every vertex"
                    : "a vertex's per-level neighbour counts disagree with the quotient matrix");
  }

  // Spectra, closed route vs dense route.
  auto compare = [&](const std::string& name, const Spectrum& closed, MatrixKind kind,
                     std::optional<Rat> alpha = {}) {
    DenseSymmetricMatrix M = assemble_matrix(g, kind, alpha, opt.dense_budget);
    EigenResult er = symmetric_eigensolve(M, opt.tol);
    SpectrumComparison cmp = compare_spectra(closed, er, opt.tol);
    ck.add(name, cmp.pass, cmp.detail);
    return cmp;
  };
  compare("laplacian-closed-vs-dense", laplacian_spectrum(lp), MatrixKind::Laplacian);
  compare("adjacency-closed-vs-dense", adjacency_spectrum(lp, qm), MatrixKind::Adjacency);
  compare("signless-closed-vs-dense", signless_laplacian_spectrum(lp, qm),
          MatrixKind::Signless);
  {
    bool all = true;
    double worst = 0;
    std::string detail;
    for (const Rat& a : opt.alphas) {
      DenseSymmetricMatrix M = assemble_matrix(g, MatrixKind::AAlpha, a, opt.dense_budget);
      EigenResult er = symmetric_eigensolve(M, opt.tol);
      SpectrumComparison cmp = compare_spectra(a_alpha_spectrum(lp, qm, a), er, opt.tol);
      all = all && cmp.pass;
      worst = std::max(worst, cmp.max_deviation);
      if (!cmp.pass) detail += " alpha=" + to_string(a) + ": " + cmp.detail + ";";
    }
    ck.add("a-alpha-closed-vs-dense", all,
           all ? "alpha in {0, 1/4, 1/2, 3/4, 1}, worst deviation " + dev_string(worst)
               : detail);
  }
  compare("distance-laplacian-closed-vs-dense", distance_laplacian_spectrum(lp),
          MatrixKind::DistanceLaplacian);

  // BFS distances stay within the diameter-2 regime the transform needs.
  {
    DenseSymmetricMatrix D = assemble_matrix(g, MatrixKind::Distance, {}, opt.dense_budget);
    double lo = 3, hi = 0;
    for (int i = 0; i < D.dim(); ++i)
      for (int j = 0; j < D.dim(); ++j)
        if (i != j) {
          lo = std::min(lo, D.m(i, j));
          hi = std::max(hi, D.m(i, j));
        }
    bool ok = n <= 1 || (lo >= 1 && hi <= 2);
    ck.add("bfs-distances-within-2", ok,
           n <= 1 ? "single vertex, nothing to measure"
                  : "off-diagonal BFS distances lie in [" + std::to_string(int(lo)) +
                        ", " + std::to_string(int(hi)) + "]");
  }

  // Exact quotient eigenvectors: formula correctness and zero residual
  // against the (possibly injected) pipeline quotient.
  {
    const int s = rp.special_level();
    const auto lstar = qm.laplacian();
    bool all = true;
    std::string detail = "k in 1.." + std::to_string(qm.dim) + " minus {" +
                         std::to_string(s) + "}";
    int tested = 0;
    for (int k = 1; k <= qm.dim; ++k) {
      if (k == s) continue;
      ++tested;
      LaplacianEigenvector ev = laplacian_eigenvector(lp, k);
      const Rat lambda(ev.eigenvalue);
      for (int i = 0; i < qm.dim && all; ++i) {
        Rat acc = 0;
        for (int j = 0; j < qm.dim; ++j) acc += Rat(lstar[i][j]) * ev.coords[j];
        if (acc != lambda * ev.coords[i]) {
          all = false;
          detail = "nonzero exact residual at k = " + std::to_string(k) + ", row " +
                   std::to_string(i + 1);
        }
      }
    }
    if (tested == 0) detail = "no applicable k (c = 2)";
    ck.add("laplacian-eigenvectors-exact", all, all ? detail + ": residuals exactly zero" : detail);
  }

  // Exact characteristic polynomial of L* vanishes at every claimed
  // eigenvalue.
  {
    const auto lstar = qm.laplacian();
    const int s = rp.special_level();
    bool all = true;
    std::string failed;
    std::vector<Int> lambdas{Int(0)};
    for (const LevelInfo& li : lp.levels())
      if (li.index != s) lambdas.push_back(ipow(rp.p(), li.index) - 1);
    for (const Int& lam : lambdas) {
      if (charpoly_eval_exact(lstar, lam) != 0) {
        all = false;
        failed += " " + to_string(lam);
      }
    }
    ck.add("laplacian-charpoly-roots", all,
           all ? "det(lambda I - L*) = 0 exactly at all " +
                     std::to_string(lambdas.size()) + " claimed eigenvalues"
               : "char poly does not vanish at:" + failed);
  }

  // Trace identities, exact where both sides are exact.
  {
    Int two_m = 0;
    for (const LevelInfo& li : lp.levels()) two_m += li.size * li.degree;
    bool ok = true;
    std::string why;

    if (exact_sum(laplacian_spectrum(lp)) != Rat(two_m)) {
      ok = false;
      why += " laplacian-sum;";
    }
    const Int n_int = rp.graph_order();
    Rat dl_expected = Rat(2 * n_int * (n_int - 1) - two_m);
    if (exact_sum(distance_laplacian_spectrum(lp)) != dl_expected) {
      ok = false;
      why += " distance-laplacian-sum;";
    }

    // Adjacency: exact fixed part must cancel tr(Q) exactly; the numeric
    // tail must track tr(Q) within floating tolerance.
    const double trace_tol = 1e-9;
    {
      Spectrum a = adjacency_spectrum(lp, qm);
      auto [exact, numeric] = split_sums(a);
      Int trq = trace_of(qm.q);
      if (exact != -Rat(trq)) {
        ok = false;
        why += " adjacency-fixed-sum;";
      }
      if (std::abs(numeric - to_double(trq)) >
          trace_tol * std::max(1.0, std::abs(to_double(trq)))) {
        ok = false;
        why += " adjacency-tail-sum;";
      }
    }
    {
      Spectrum qs = signless_laplacian_spectrum(lp, qm);
      auto [exact, numeric] = split_sums(qs);
      Int trdq = trace_of(qm.signless());
      if (exact + Rat(trdq) != Rat(two_m)) {
        ok = false;
        why += " signless-fixed-sum;";
      }
      if (std::abs(numeric - to_double(trdq)) >
          trace_tol * std::max(1.0, std::abs(to_double(trdq)))) {
        ok = false;
        why += " signless-tail-sum;";
      }
    }
    for (const Rat& a : opt.alphas) {
      Spectrum s = a_alpha_spectrum(lp, qm, a);
      auto [exact, numeric] = split_sums(s);
      // tr(A_alpha) = alpha * 2m; tr(B(alpha)) closes the exact part.
      Rat trb = 0;
      const auto b = qm.b_of_alpha(a);
      for (int i = 0; i < qm.dim; ++i) trb += b[i][i];
      if (exact + trb != a * Rat(two_m)) {
        ok = false;
        why += " a-alpha-fixed-sum(alpha=" + to_string(a) + ");";
      }
      if (std::abs(numeric - to_double(trb)) >
          trace_tol * std::max(1.0, std::abs(to_double(trb)))) {
        ok = false;
        why += " a-alpha-tail-sum(alpha=" + to_string(a) + ");";
      }
    }
    ck.add("trace-identities", ok,
           ok ? "spectrum sums match matrix traces (exact parts exactly)" : why);
  }

  // Signless values are exactly twice the A_{1/2} values.
  {
    Spectrum half = a_alpha_spectrum(lp, qm, Rat(1, 2));
    Spectrum sig = signless_laplacian_spectrum(lp, qm);
    std::map<Rat, Int> doubled, direct;
    std::vector<double> half_tail, sig_tail;
    for (const auto& e : half.entries) {
      if (const Int* v = std::get_if<Int>(&e.value))
        doubled[Rat(*v) * 2] += e.multiplicity;
      else if (const Rat* v = std::get_if<Rat>(&e.value))
        doubled[*v * 2] += e.multiplicity;
      else
        half_tail.push_back(2 * std::get<double>(e.value));
    }
    for (const auto& e : sig.entries) {
      if (const Int* v = std::get_if<Int>(&e.value))
        direct[Rat(*v)] += e.multiplicity;
      else if (const Rat* v = std::get_if<Rat>(&e.value))
        direct[*v] += e.multiplicity;
      else
        sig_tail.push_back(std::get<double>(e.value));
    }
    bool ok = doubled == direct && half_tail.size() == sig_tail.size();
    if (ok) {
      std::sort(half_tail.begin(), half_tail.end());
      std::sort(sig_tail.begin(), sig_tail.end());
      for (size_t i = 0; i < half_tail.size(); ++i)
        if (std::abs(half_tail[i] - sig_tail[i]) > opt.tol) ok = false;
    }
    ck.add("signless-is-doubled-half-alpha", ok,
           ok ? "2 A_{1/2} values coincide with the signless values"
              : "2 A_{1/2} and signless spectra differ");
  }

  // Structure invariants, closed vs brute force.
  {
    StructureReport sr = structure_report(g, lp, opt.structure);
    std::string detail;
    for (const std::string& d : sr.disagreements) detail += d + "; ";
    size_t universal = 0;
    {
      std::vector<size_t> deg(n, 0);
      for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
      }
      for (size_t v = 0; v < n; ++v)
        if (deg[v] == n - 1) ++universal;
    }
    bool uok = Int(universal) == sr.universal_vertices;
    if (!uok)
      detail += "universal vertices: closed form " + to_string(sr.universal_vertices) +
                ", explicit count " + std::to_string(universal) + "; ";
    ck.add("structure-invariants", sr.brute_all_agree && uok,
           detail.empty() ? "brute-force clique/independence/domination/diameter/girth and universal count agree"
                          : detail);
  }

  // Each closed spectrum accounts for all n eigenvalues.
  {
    auto count = [](const Spectrum& s) {
      Int total = 0;
      for (const auto& e : s.entries) total += e.multiplicity;
      return total;
    };
    const Int n_int = rp.graph_order();
    bool ok = count(laplacian_spectrum(lp)) == n_int &&
              count(distance_laplacian_spectrum(lp)) == n_int &&
              count(adjacency_spectrum(lp, qm)) == n_int &&
              count(signless_laplacian_spectrum(lp, qm)) == n_int &&
              count(a_alpha_spectrum(lp, qm, Rat(1, 2))) == n_int;
    ck.add("multiplicity-sums", ok,
           ok ? "every closed spectrum carries exactly n = " + to_string(n_int) +
                    " eigenvalues"
              : "a closed spectrum does not sum to n");
  }

  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.passed; });
  return report;
}

}  // namespace zdg
