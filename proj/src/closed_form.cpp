#include "zdg/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "zdg/errors.hpp"

namespace zdg {

// ---- Spectrum plumbing ----------------------------------------------------

double SpectrumEntry::evaluated() const {
  if (const Int* v = std::get_if<Int>(&value)) return to_double(*v);
  if (const Rat* v = std::get_if<Rat>(&value)) return to_double(*v);
  if (const double* v = std::get_if<double>(&value)) return *v;
  return std::nan("");
}

std::string SpectrumEntry::value_string() const {
  if (const Int* v = std::get_if<Int>(&value)) return to_string(*v);
  if (const Rat* v = std::get_if<Rat>(&value)) return to_string(*v);
  if (const double* v = std::get_if<double>(&value)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", *v);
    return buf;
  }
  const auto& a = std::get<AffineEigenvalue>(value);
  std::string s;
  if (a.slope == 1) {
    s = "alpha";
  } else if (a.slope == -1) {
    s = "-alpha";
  } else if (a.slope != 0) {
    s = to_string(a.slope) + "*alpha";
  }
  if (a.intercept != 0 || s.empty()) {
    if (!s.empty() && a.intercept > 0) s += "+";
    s += to_string(a.intercept);
  }
  return s;
}

std::string matrix_kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::Signless: return "signless";
    case MatrixKind::AAlpha: return "a-alpha";
    case MatrixKind::Distance: return "distance";
    case MatrixKind::DistanceLaplacian: return "distance-laplacian";
    case MatrixKind::Quotient: return "quotient";
  }
  return "?";
}

void Spectrum::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     if (a.is_affine() || b.is_affine()) {
                       if (a.is_affine() != b.is_affine()) return a.is_affine();
                       const auto& x = std::get<AffineEigenvalue>(a.value);
                       const auto& y = std::get<AffineEigenvalue>(b.value);
                       if (x.slope != y.slope) return x.slope > y.slope;
                       return x.intercept > y.intercept;
                     }
                     double av = a.evaluated(), bv = b.evaluated();
                     if (av != bv) return av > bv;
                     if (a.multiplicity != b.multiplicity)
                       return a.multiplicity > b.multiplicity;
                     return a.value_string() < b.value_string();
                   });
}

std::vector<double> Spectrum::expanded(size_t limit) const {
  if (symbolic_tail)
    fail(ErrorCode::Domain, "spectrum has a symbolic quotient tail; evaluate at a concrete alpha first");
  Int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  if (total > Int(limit))
    fail(ErrorCode::Domain, "spectrum too large to expand: " + to_string(total));
  std::vector<double> out;
  out.reserve(total.convert_to<size_t>());
  for (const auto& e : entries) {
    if (e.is_affine())
      fail(ErrorCode::Domain, "cannot expand an affine (symbolic alpha) spectrum");
    size_t m = e.multiplicity.convert_to<size_t>();
    out.insert(out.end(), m, e.evaluated());
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

// ---- Quotient matrices ----------------------------------------------------

QuotientMatrices build_quotient(const LevelPartition& lp) {
  const int dim = lp.level_count();
  const int64_t c = lp.params().c();
  QuotientMatrices qm;
  qm.dim = dim;
  qm.dstar.reserve(dim);
  qm.sizes.reserve(dim);
  qm.q.assign(dim, std::vector<Int>(dim, 0));
  for (int i = 1; i <= dim; ++i) {
    const LevelInfo& li = lp.level(i);
    qm.dstar.push_back(li.degree);
    qm.sizes.push_back(li.size);
    for (int j = 1; j <= dim; ++j) {
      if (i == j) {
        if (li.clique) qm.q[i - 1][j - 1] = li.size - 1;
      } else if (i + j >= c) {
        qm.q[i - 1][j - 1] = lp.level(j).size;
      }
    }
  }
  return qm;
}

std::vector<std::vector<Int>> QuotientMatrices::laplacian() const {
  std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[i][j] = (i == j ? dstar[i] : Int(0)) - q[i][j];
  return m;
}

std::vector<std::vector<Int>> QuotientMatrices::signless() const {
  std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[i][j] = (i == j ? dstar[i] : Int(0)) + q[i][j];
  return m;
}

std::vector<std::vector<Rat>> QuotientMatrices::b_of_alpha(const Rat& alpha) const {
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
  const Rat beta = Rat(1) - alpha;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[i][j] = (i == j ? alpha * Rat(dstar[i]) : Rat(0)) + beta * Rat(q[i][j]);
  return m;
}

DenseSymmetricMatrix symmetrized_quotient(const QuotientMatrices& qm,
                                          const Rat& alpha_weight,
                                          const Rat& q_weight, MatrixKind kind,
                                          std::optional<Rat> alpha) {
  const int n = qm.dim;
  const double aw = to_double(alpha_weight);
  const double qw = to_double(q_weight);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = aw * to_double(qm.dstar[i]) + qw * to_double(qm.q[i][i]);
    for (int j = i + 1; j < n; ++j) {
      // Q_ij = n_j and Q_ji = n_i, so conjugating by diag(sqrt n_i) lands on
      // the symmetric matrix with entries sqrt(Q_ij Q_ji) = sqrt(n_i n_j) and
      // the same spectrum. Using the actual entries (not the rule) keeps a
      // corrupted quotient visible to the eigenvalue checks.
      double v = qw * std::sqrt(to_double(qm.q[i][j]) * to_double(qm.q[j][i]));
      if (v != 0.0) {
        m(i, j) = v;
        m(j, i) = v;
      }
    }
  }
  return DenseSymmetricMatrix{std::move(m), kind, std::move(alpha)};
}

// ---- Spectra ---------------------------------------------------------------

namespace {

void push_exact(std::map<Rat, Int, std::greater<Rat>>& acc, const Rat& v, const Int& mult) {
  if (mult > 0) acc[v] += mult;
}

SpectrumEntry exact_entry(const Rat& v, const Int& mult) {
  SpectrumEntry e;
  if (denominator(v) == 1) {
    e.value = numerator(v);
  } else {
    e.value = v;
  }
  e.multiplicity = mult;
  return e;
}

void append_quotient_tail(Spectrum& spec, const QuotientMatrices& qm,
                          const Rat& alpha_weight, const Rat& q_weight) {
  DenseSymmetricMatrix sym = symmetrized_quotient(qm, alpha_weight, q_weight,
                                                  MatrixKind::Quotient);
  EigenResult er = symmetric_eigensolve(sym);
  for (double v : er.eigenvalues) {
    SpectrumEntry e;
    e.value = v;
    e.multiplicity = 1;
    e.residual_bound = er.residual_bound;
    spec.entries.push_back(std::move(e));
  }
  spec.residual_bound = std::max(spec.residual_bound, er.residual_bound);
}

}  // namespace

Spectrum a_alpha_spectrum(const LevelPartition& lp, const QuotientMatrices& qm,
                          const std::optional<Rat>& alpha) {
  if (alpha && (*alpha < 0 || *alpha > 1))
    fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1], got " + to_string(*alpha));
  const int64_t p = lp.params().p();
  Spectrum spec;
  spec.kind = MatrixKind::AAlpha;
  spec.alpha = alpha;
  spec.total_multiplicity = lp.params().graph_order();
  if (alpha) {
    std::map<Rat, Int, std::greater<Rat>> acc;
    for (const LevelInfo& li : lp.levels()) {
      Rat v = *alpha * Rat(ipow(p, li.index) - 1) - (li.clique ? 1 : 0);
      push_exact(acc, v, li.size - 1);
    }
    for (const auto& [v, m] : acc) spec.entries.push_back(exact_entry(v, m));
    append_quotient_tail(spec, qm, *alpha, Rat(1) - *alpha);
  } else {
    for (const LevelInfo& li : lp.levels()) {
      if (li.size - 1 <= 0) continue;
      SpectrumEntry e;
      e.value = AffineEigenvalue{ipow(p, li.index) - 1, li.clique ? Int(-1) : Int(0)};
      e.multiplicity = li.size - 1;
      spec.entries.push_back(std::move(e));
    }
    spec.symbolic_tail = true;
    spec.symbolic_tail_dim = qm.dim;
  }
  spec.sort_entries();
  return spec;
}

Spectrum a_alpha_spectrum(const LevelPartition& lp, const std::optional<Rat>& alpha) {
  return a_alpha_spectrum(lp, build_quotient(lp), alpha);
}

Spectrum adjacency_spectrum(const LevelPartition& lp, const QuotientMatrices& qm) {
  Spectrum spec;
  spec.kind = MatrixKind::Adjacency;
  spec.total_multiplicity = lp.params().graph_order();
  Int zero_mult = 0, minus_mult = 0;
  for (const LevelInfo& li : lp.levels())
    (li.clique ? minus_mult : zero_mult) += li.size - 1;
  if (zero_mult > 0) spec.entries.push_back(exact_entry(Rat(0), zero_mult));
  if (minus_mult > 0) spec.entries.push_back(exact_entry(Rat(-1), minus_mult));
  append_quotient_tail(spec, qm, Rat(0), Rat(1));
  spec.sort_entries();
  return spec;
}

Spectrum adjacency_spectrum(const LevelPartition& lp) {
  return adjacency_spectrum(lp, build_quotient(lp));
}

Spectrum signless_laplacian_spectrum(const LevelPartition& lp,
                                     const QuotientMatrices& qm) {
  const int64_t p = lp.params().p();
  Spectrum spec;
  spec.kind = MatrixKind::Signless;
  spec.total_multiplicity = lp.params().graph_order();
  std::map<Rat, Int, std::greater<Rat>> acc;
  for (const LevelInfo& li : lp.levels()) {
    Rat v = Rat(ipow(p, li.index) - (li.clique ? 3 : 1));
    push_exact(acc, v, li.size - 1);
  }
  for (const auto& [v, m] : acc) spec.entries.push_back(exact_entry(v, m));
  append_quotient_tail(spec, qm, Rat(1), Rat(1));
  spec.sort_entries();
  return spec;
}

Spectrum signless_laplacian_spectrum(const LevelPartition& lp) {
  return signless_laplacian_spectrum(lp, build_quotient(lp));
}

Spectrum laplacian_spectrum(const LevelPartition& lp) {
  const RingParams& rp = lp.params();
  const int s = rp.special_level();
  Spectrum spec;
  spec.kind = MatrixKind::Laplacian;
  spec.total_multiplicity = rp.graph_order();
  std::map<Rat, Int, std::greater<Rat>> acc;
  push_exact(acc, Rat(0), 1);
  for (const LevelInfo& li : lp.levels()) {
    Int mult = (li.index == s) ? li.size - 1 : li.size;
    push_exact(acc, Rat(ipow(rp.p(), li.index) - 1), mult);
  }
  for (const auto& [v, m] : acc) spec.entries.push_back(exact_entry(v, m));
  spec.sort_entries();
  return spec;
}

Spectrum distance_laplacian_spectrum(const LevelPartition& lp) {
  // The graph has diameter <= 2 for every (p, c) (complete or a single
  // vertex when c = 2), so the transmission-regular transform applies:
  // nonzero Laplacian eigenvalues map to 2n - lambda, zero stays.
  const Int n = lp.params().graph_order();
  Spectrum lap = laplacian_spectrum(lp);
  Spectrum spec;
  spec.kind = MatrixKind::DistanceLaplacian;
  spec.total_multiplicity = n;
  for (const auto& e : lap.entries) {
    const Int& v = std::get<Int>(e.value);
    if (v == 0) {
      spec.entries.push_back(exact_entry(Rat(0), e.multiplicity));
    } else {
      spec.entries.push_back(exact_entry(Rat(2 * n - v), e.multiplicity));
    }
  }
  spec.sort_entries();
  return spec;
}

// ---- Exact Laplacian eigenvectors -----------------------------------------

namespace {

Rat p_pow(int64_t p, int64_t e) {
  if (e >= 0) return Rat(ipow(p, e));
  return Rat(Int(1), ipow(p, -e));
}

}  // namespace

LaplacianEigenvector laplacian_eigenvector(const LevelPartition& lp, int k) {
  const RingParams& rp = lp.params();
  const int64_t p = rp.p();
  const int64_t c = rp.c();
  const int s = rp.special_level();
  const int dim = lp.level_count();
  if (k < 1 || k > dim)
    fail(ErrorCode::Domain, "k must lie in 1.." + std::to_string(dim));
  if (k == s)
    fail(ErrorCode::Domain,
         "no closed-form quotient eigenvector at the special level k = " +
             std::to_string(s));

  LaplacianEigenvector ev;
  ev.k = k;
  ev.eigenvalue = ipow(p, k) - 1;
  ev.coords.assign(static_cast<size_t>(dim), Rat(0));
  const int64_t e = 2 * int64_t(k) - c + 1;
  if (k < s) {
    ev.scalar = (Rat(1) - p_pow(p, e)) / Rat(p - 1);
    ev.coords[k - 1] = -ev.scalar;
    for (int64_t j = k + 1; j <= c - 1 - k; ++j) ev.coords[j - 1] = 1;
  } else {
    ev.scalar = Rat(p - 1) / (p_pow(p, e) - Rat(p));
    for (int64_t j = c - k; j <= k - 1; ++j) ev.coords[j - 1] = -ev.scalar;
    ev.coords[k - 1] = 1;
  }

  // The whole point is exactness: refuse to return a vector whose residual
  // against L* = D* - Q is not identically zero.
  const auto lstar = build_quotient(lp).laplacian();
  const Rat lambda = Rat(ev.eigenvalue);
  for (int i = 0; i < dim; ++i) {
    Rat acc = 0;
    for (int j = 0; j < dim; ++j) acc += Rat(lstar[i][j]) * ev.coords[j];
    if (acc != lambda * ev.coords[i])
      fail(ErrorCode::Internal, "nonzero exact residual in quotient eigenvector k=" +
                                    std::to_string(k));
  }
  return ev;
}

// ---- Energy and fixed eigenvectors ----------------------------------------

EnergyResult graph_energy(const Spectrum& spec) {
  if (spec.symbolic_tail)
    fail(ErrorCode::Domain, "energy needs an evaluated spectrum, not a symbolic one");
  EnergyResult r;
  r.adjacency = spec.kind == MatrixKind::Adjacency;
  for (const auto& e : spec.entries) {
    if (e.is_affine())
      fail(ErrorCode::Domain, "energy needs an evaluated spectrum, not a symbolic one");
    r.value += std::abs(e.evaluated()) * to_double(e.multiplicity);
  }
  return r;
}

std::vector<std::vector<double>> fixed_eigenvector_basis(const GraphInstance& g,
                                                         int level) {
  const int top = static_cast<int>(g.c) - 1;
  if (level < 1 || level > top)
    fail(ErrorCode::Domain, "level index outside 1.." + std::to_string(top));
  const size_t n = g.vertex_count();
  std::vector<uint32_t> members;
  for (uint32_t v = 0; v < n; ++v)
    if (g.vertex_level[v] == level) members.push_back(v);
  if (members.size() < 2) return {};
  if ((members.size() - 1) * n > (uint64_t(1) << 27))
    fail(ErrorCode::BudgetExceeded, "fixed eigenvector basis too large to materialize");
  std::vector<std::vector<double>> basis;
  basis.reserve(members.size() - 1);
  for (size_t j = 1; j < members.size(); ++j) {
    std::vector<double> vec(n, 0.0);
    vec[members[0]] = 1.0;
    vec[members[j]] = -1.0;
    basis.push_back(std::move(vec));
  }
  return basis;
}

// ---- Exact characteristic polynomial evaluation ----------------------------

Int charpoly_eval_exact(const std::vector<std::vector<Int>>& m, const Int& lambda) {
  const size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorCode::InvalidArgument, "matrix must be square");
    for (size_t j = 0; j < n; ++j) a[i][j] = (i == j ? lambda : Int(0)) - m[i][j];
  }
  // Bareiss fraction-free elimination: every division below is exact.
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace zdg
