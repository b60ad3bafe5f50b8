#include "zdg/zdg.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "zdg/closed_form.hpp"
#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"
#include "zdg/numeric.hpp"
#include "zdg/ring.hpp"
#include "zdg/structure.hpp"
#include "zdg/verify.hpp"

using namespace zdg;

namespace {

thread_local std::string g_last_error;

zdg_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return ZDG_ERROR_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return ZDG_ERROR_NOT_PRIME;
    case ErrorCode::BudgetExceeded: return ZDG_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::Domain: return ZDG_ERROR_DOMAIN;
    case ErrorCode::Disconnected: return ZDG_ERROR_DISCONNECTED;
    case ErrorCode::NoConvergence: return ZDG_ERROR_NO_CONVERGENCE;
    case ErrorCode::Internal: return ZDG_ERROR_INTERNAL;
  }
  return ZDG_ERROR_INTERNAL;
}

zdg_status set_error(const Error& e) {
  g_last_error = e.what();
  return map_code(e.code());
}

zdg_status set_error(const char* what, zdg_status code) {
  g_last_error = what;
  return code;
}

template <typename F>
zdg_status guarded(F&& f) {
  try {
    f();
    return ZDG_OK;
  } catch (const Error& e) {
    return set_error(e);
  } catch (const std::bad_alloc&) {
    return set_error("out of memory", ZDG_ERROR_INTERNAL);
  } catch (const std::exception& e) {
    return set_error(e.what(), ZDG_ERROR_INTERNAL);
  }
}

int64_t write_string(const std::string& s, char* buf, size_t cap) {
  if (buf && cap > 0) {
    size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return static_cast<int64_t>(s.size());
}

// Exact "num/den" or plain decimal text to a rational.
Rat parse_alpha(const std::string& text) {
  auto digits_ok = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  Rat value;
  if (size_t slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || Int(den) == 0)
      fail(ErrorCode::InvalidArgument, "alpha must be \"num/den\" or a decimal, got \"" + text + "\"");
    value = Rat(Int(num), Int(den));
  } else if (size_t dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!digits_ok(ip) || !digits_ok(fp))
      fail(ErrorCode::InvalidArgument, "alpha must be \"num/den\" or a decimal, got \"" + text + "\"");
    Int scale = ipow(10, static_cast<int64_t>(fp.size()));
    value = Rat(Int(ip) * scale + Int(fp), scale);
  } else {
    if (!digits_ok(t))
      fail(ErrorCode::InvalidArgument, "alpha must be \"num/den\" or a decimal, got \"" + text + "\"");
    value = Rat(Int(t));
  }
  return neg ? -value : value;
}

}  // namespace

struct zdg_params {
  RingParams rp;
  LevelPartition lp;
};

struct zdg_graph {
  GraphInstance g;
};

struct zdg_spectrum {
  Spectrum spec;
  std::optional<SpectrumComparison> cmp;
};

struct zdg_structure_report {
  StructureReport r;
};

struct zdg_verify_report {
  VerifyReport r;
};

extern "C" {

const char* zdg_version(void) { return "1.0.0"; }

const char* zdg_last_error(void) { return g_last_error.c_str(); }

/* ---- params ---- */

zdg_status zdg_params_create(int64_t p, int64_t c, zdg_params** out) {
  if (!out) return set_error("out must not be NULL", ZDG_ERROR_NULL_ARGUMENT);
  *out = nullptr;
  return guarded([&] {
    RingParams rp(p, c);
    *out = new zdg_params{rp, LevelPartition(rp)};
  });
}

void zdg_params_destroy(zdg_params* params) { delete params; }

int64_t zdg_params_p(const zdg_params* params) { return params ? params->rp.p() : -1; }
int64_t zdg_params_c(const zdg_params* params) { return params ? params->rp.c() : -1; }

int32_t zdg_params_level_count(const zdg_params* params) {
  return params ? params->rp.level_count() : -1;
}

int32_t zdg_params_special_level(const zdg_params* params) {
  return params ? params->rp.special_level() : -1;
}

int64_t zdg_params_order(const zdg_params* params, char* buf, size_t cap) {
  if (!params) return set_error("params is NULL", ZDG_ERROR_NULL_ARGUMENT);
  return write_string(to_string(params->rp.graph_order()), buf, cap);
}

zdg_status zdg_params_order_u64(const zdg_params* params, uint64_t* out) {
  if (!params || !out) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  if (!fits_uint64(params->rp.graph_order()))
    return set_error("graph order exceeds 64 bits", ZDG_ERROR_OVERFLOW);
  *out = params->rp.graph_order().convert_to<uint64_t>();
  return ZDG_OK;
}

namespace {
const LevelInfo* level_or_error(const zdg_params* params, int32_t level) {
  if (!params) {
    set_error("params is NULL", ZDG_ERROR_NULL_ARGUMENT);
    return nullptr;
  }
  if (level < 1 || level > params->rp.level_count()) {
    set_error("level index out of range", ZDG_ERROR_DOMAIN);
    return nullptr;
  }
  return &params->lp.level(level);
}
}  // namespace

int64_t zdg_params_level_size(const zdg_params* params, int32_t level, char* buf,
                              size_t cap) {
  const LevelInfo* li = level_or_error(params, level);
  if (!li) return params ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  return write_string(to_string(li->size), buf, cap);
}

int64_t zdg_params_level_degree(const zdg_params* params, int32_t level, char* buf,
                                size_t cap) {
  const LevelInfo* li = level_or_error(params, level);
  if (!li) return params ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  return write_string(to_string(li->degree), buf, cap);
}

int32_t zdg_params_level_is_clique(const zdg_params* params, int32_t level) {
  const LevelInfo* li = level_or_error(params, level);
  if (!li) return params ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  return li->clique ? 1 : 0;
}

/* ---- graph ---- */

zdg_status zdg_graph_build(const zdg_params* params, zdg_build_mode mode,
                           zdg_graph** out) {
  if (!params || !out) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  *out = nullptr;
  return guarded([&] {
    GraphInstance g = (mode == ZDG_BUILD_BY_RING) ? build_graph_by_ring(params->rp)
                                                  : build_graph_by_rule(params->rp);
    *out = new zdg_graph{std::move(g)};
  });
}

void zdg_graph_destroy(zdg_graph* graph) { delete graph; }

uint64_t zdg_graph_vertex_count(const zdg_graph* graph) {
  return graph ? graph->g.vertex_count() : 0;
}

uint64_t zdg_graph_edge_count(const zdg_graph* graph) {
  return graph ? graph->g.edge_count() : 0;
}

zdg_status zdg_graph_edge(const zdg_graph* graph, uint64_t index, uint64_t* u,
                          uint64_t* v) {
  if (!graph || !u || !v) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  if (index >= graph->g.edge_count())
    return set_error("edge index out of range", ZDG_ERROR_DOMAIN);
  *u = graph->g.edges[index].first;
  *v = graph->g.edges[index].second;
  return ZDG_OK;
}

int32_t zdg_graph_vertex_level(const zdg_graph* graph, uint64_t vertex) {
  if (!graph) return ZDG_ERROR_NULL_ARGUMENT;
  if (vertex >= graph->g.vertex_count())
    return set_error("vertex index out of range", ZDG_ERROR_DOMAIN);
  return graph->g.vertex_level[vertex];
}

int64_t zdg_graph_vertex_label(const zdg_graph* graph, uint64_t vertex, char* buf,
                               size_t cap) {
  if (!graph) return set_error("graph is NULL", ZDG_ERROR_NULL_ARGUMENT);
  if (vertex >= graph->g.vertex_count())
    return set_error("vertex index out of range", ZDG_ERROR_DOMAIN);
  return write_string(format_coeffs(graph->g.labels[vertex]), buf, cap);
}

int64_t zdg_graph_vertex_polynomial(const zdg_graph* graph, uint64_t vertex,
                                    char* buf, size_t cap) {
  if (!graph) return set_error("graph is NULL", ZDG_ERROR_NULL_ARGUMENT);
  if (vertex >= graph->g.vertex_count())
    return set_error("vertex index out of range", ZDG_ERROR_DOMAIN);
  return write_string(format_element(graph->g.labels[vertex]), buf, cap);
}

/* ---- structure ---- */

zdg_status zdg_structure_compute(const zdg_params* params, int32_t include_brute,
                                 zdg_structure_report** out) {
  if (!params || !out) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  *out = nullptr;
  return guarded([&] {
    StructureOptions opts;
    uint64_t max_budget = std::max({opts.clique_budget, opts.independence_budget,
                                    opts.domination_budget, uint64_t(1000)});
    if (include_brute && params->rp.graph_order() <= Int(max_budget)) {
      GraphInstance g = build_graph_by_rule(params->rp);
      *out = new zdg_structure_report{structure_report(g, params->lp, opts)};
    } else {
      *out = new zdg_structure_report{structure_report_closed(params->lp)};
    }
  });
}

void zdg_structure_destroy(zdg_structure_report* report) { delete report; }

namespace {

std::string structure_field_string(const StructureReport& r, zdg_structure_field f) {
  switch (f) {
    case ZDG_STRUCT_ORDER: return to_string(r.order);
    case ZDG_STRUCT_SIZE: return to_string(r.size);
    case ZDG_STRUCT_CLIQUE: return to_string(r.clique_number);
    case ZDG_STRUCT_INDEPENDENCE: return to_string(r.independence_number);
    case ZDG_STRUCT_DOMINATION: return to_string(r.domination_number);
    case ZDG_STRUCT_DIAMETER: return std::to_string(r.diameter);
    case ZDG_STRUCT_GIRTH: return r.girth.str();
    case ZDG_STRUCT_UNIVERSAL: return to_string(r.universal_vertices);
  }
  fail(ErrorCode::Domain, "unknown structure field");
}

const BruteField* brute_field(const StructureReport& r, zdg_structure_field f) {
  switch (f) {
    case ZDG_STRUCT_CLIQUE: return &r.brute_clique;
    case ZDG_STRUCT_INDEPENDENCE: return &r.brute_independence;
    case ZDG_STRUCT_DOMINATION: return &r.brute_domination;
    case ZDG_STRUCT_DIAMETER: return &r.brute_diameter;
    case ZDG_STRUCT_GIRTH: return &r.brute_girth;
    default: return nullptr;
  }
}

}  // namespace

int64_t zdg_structure_value(const zdg_structure_report* report,
                            zdg_structure_field field, char* buf, size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  std::string s;
  zdg_status st = guarded([&] { s = structure_field_string(report->r, field); });
  if (st != ZDG_OK) return st;
  return write_string(s, buf, cap);
}

int32_t zdg_structure_brute_available(const zdg_structure_report* report,
                                      zdg_structure_field field) {
  if (!report) return ZDG_ERROR_NULL_ARGUMENT;
  const BruteField* b = brute_field(report->r, field);
  return b && b->computed ? 1 : 0;
}

int64_t zdg_structure_brute_value(const zdg_structure_report* report,
                                  zdg_structure_field field, char* buf, size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  const BruteField* b = brute_field(report->r, field);
  if (!b || !b->computed)
    return set_error("brute-force value not computed for this field", ZDG_ERROR_DOMAIN);
  if (field == ZDG_STRUCT_GIRTH) return write_string(b->girth.str(), buf, cap);
  return write_string(to_string(b->value), buf, cap);
}

int32_t zdg_structure_agreement(const zdg_structure_report* report) {
  if (!report) return ZDG_ERROR_NULL_ARGUMENT;
  return report->r.brute_all_agree ? 1 : 0;
}

int64_t zdg_structure_disagreements(const zdg_structure_report* report, char* buf,
                                    size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  std::string s;
  for (const std::string& d : report->r.disagreements) {
    if (!s.empty()) s += "; ";
    s += d;
  }
  return write_string(s, buf, cap);
}

int32_t zdg_structure_generic_diameter_holds(const zdg_structure_report* r) {
  if (!r) return ZDG_ERROR_NULL_ARGUMENT;
  return r->r.generic_diameter_holds ? 1 : 0;
}

int32_t zdg_structure_generic_girth_holds(const zdg_structure_report* r) {
  if (!r) return ZDG_ERROR_NULL_ARGUMENT;
  return r->r.generic_girth_holds ? 1 : 0;
}

/* ---- spectrum ---- */

namespace {

MatrixKind map_matrix_kind(zdg_matrix_kind k) {
  switch (k) {
    case ZDG_MATRIX_ADJACENCY: return MatrixKind::Adjacency;
    case ZDG_MATRIX_LAPLACIAN: return MatrixKind::Laplacian;
    case ZDG_MATRIX_SIGNLESS: return MatrixKind::Signless;
    case ZDG_MATRIX_A_ALPHA: return MatrixKind::AAlpha;
    case ZDG_MATRIX_DISTANCE_LAPLACIAN: return MatrixKind::DistanceLaplacian;
  }
  fail(ErrorCode::InvalidArgument, "unknown matrix kind");
}

Spectrum closed_spectrum(const LevelPartition& lp, MatrixKind kind,
                         const std::optional<Rat>& alpha) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_spectrum(lp);
    case MatrixKind::Laplacian: return laplacian_spectrum(lp);
    case MatrixKind::Signless: return signless_laplacian_spectrum(lp);
    case MatrixKind::AAlpha: return a_alpha_spectrum(lp, alpha);
    case MatrixKind::DistanceLaplacian: return distance_laplacian_spectrum(lp);
    default: fail(ErrorCode::InvalidArgument, "unsupported spectrum kind");
  }
}

}  // namespace

zdg_status zdg_spectrum_compute(const zdg_params* params, zdg_matrix_kind kind,
                                zdg_method method, const char* alpha, double tol,
                                uint64_t dense_budget, zdg_spectrum** out) {
  if (!params || !out) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  *out = nullptr;
  return guarded([&] {
    const MatrixKind mk = map_matrix_kind(kind);
    if (tol <= 0) tol = 1e-8;
    if (dense_budget == 0) dense_budget = kDenseBudgetDefault;
    std::optional<Rat> a;
    if (mk == MatrixKind::AAlpha && alpha) a = parse_alpha(alpha);
    if (mk == MatrixKind::AAlpha && !alpha && method != ZDG_METHOD_CLOSED)
      fail(ErrorCode::InvalidArgument,
           "a symbolic a-alpha spectrum is only available from the closed method");

    auto result = std::make_unique<zdg_spectrum>();
    if (method == ZDG_METHOD_CLOSED) {
      result->spec = closed_spectrum(params->lp, mk, a);
    } else {
      GraphInstance g = build_graph_by_rule(params->rp);
      DenseSymmetricMatrix M = assemble_matrix(g, mk, a, dense_budget);
      EigenResult er = symmetric_eigensolve(M, tol);
      if (method == ZDG_METHOD_DENSE) {
        result->spec = spectrum_from_dense(er, mk, a);
      } else {
        result->spec = closed_spectrum(params->lp, mk, a);
        result->cmp = compare_spectra(result->spec, er, tol);
        result->spec.residual_bound =
            std::max(result->spec.residual_bound, er.residual_bound);
      }
    }
    *out = result.release();
  });
}

void zdg_spectrum_destroy(zdg_spectrum* spectrum) { delete spectrum; }

uint64_t zdg_spectrum_entry_count(const zdg_spectrum* spectrum) {
  return spectrum ? spectrum->spec.entries.size() : 0;
}

namespace {
const SpectrumEntry* entry_or_error(const zdg_spectrum* s, uint64_t i) {
  if (!s) {
    set_error("spectrum is NULL", ZDG_ERROR_NULL_ARGUMENT);
    return nullptr;
  }
  if (i >= s->spec.entries.size()) {
    set_error("entry index out of range", ZDG_ERROR_DOMAIN);
    return nullptr;
  }
  return &s->spec.entries[i];
}
}  // namespace

int32_t zdg_spectrum_entry_kind(const zdg_spectrum* spectrum, uint64_t index) {
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  if (!e) return spectrum ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  if (e->is_affine()) return ZDG_ENTRY_AFFINE;
  if (e->is_numeric()) return ZDG_ENTRY_NUMERIC;
  return ZDG_ENTRY_EXACT;
}

int64_t zdg_spectrum_entry_value(const zdg_spectrum* spectrum, uint64_t index,
                                 char* buf, size_t cap) {
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  if (!e) return spectrum ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  return write_string(e->value_string(), buf, cap);
}

zdg_status zdg_spectrum_entry_value_double(const zdg_spectrum* spectrum,
                                           uint64_t index, double* out) {
  if (!out) return set_error("out is NULL", ZDG_ERROR_NULL_ARGUMENT);
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  if (!e) return spectrum ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  if (e->is_affine())
    return set_error("affine entry has no numeric value without alpha", ZDG_ERROR_DOMAIN);
  *out = e->evaluated();
  return ZDG_OK;
}

int64_t zdg_spectrum_entry_multiplicity(const zdg_spectrum* spectrum, uint64_t index,
                                        char* buf, size_t cap) {
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  if (!e) return spectrum ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  return write_string(to_string(e->multiplicity), buf, cap);
}

zdg_status zdg_spectrum_entry_multiplicity_u64(const zdg_spectrum* spectrum,
                                               uint64_t index, uint64_t* out) {
  if (!out) return set_error("out is NULL", ZDG_ERROR_NULL_ARGUMENT);
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  if (!e) return spectrum ? ZDG_ERROR_DOMAIN : ZDG_ERROR_NULL_ARGUMENT;
  if (!fits_uint64(e->multiplicity))
    return set_error("multiplicity exceeds 64 bits", ZDG_ERROR_OVERFLOW);
  *out = e->multiplicity.convert_to<uint64_t>();
  return ZDG_OK;
}

double zdg_spectrum_entry_residual(const zdg_spectrum* spectrum, uint64_t index) {
  const SpectrumEntry* e = entry_or_error(spectrum, index);
  return e ? e->residual_bound : 0.0;
}

double zdg_spectrum_residual_bound(const zdg_spectrum* spectrum) {
  return spectrum ? spectrum->spec.residual_bound : 0.0;
}

int64_t zdg_spectrum_total_multiplicity(const zdg_spectrum* spectrum, char* buf,
                                        size_t cap) {
  if (!spectrum) return set_error("spectrum is NULL", ZDG_ERROR_NULL_ARGUMENT);
  return write_string(to_string(spectrum->spec.total_multiplicity), buf, cap);
}

int32_t zdg_spectrum_symbolic_tail_dim(const zdg_spectrum* spectrum) {
  if (!spectrum) return ZDG_ERROR_NULL_ARGUMENT;
  return spectrum->spec.symbolic_tail ? spectrum->spec.symbolic_tail_dim : 0;
}

int32_t zdg_spectrum_comparison_available(const zdg_spectrum* spectrum) {
  if (!spectrum) return ZDG_ERROR_NULL_ARGUMENT;
  return spectrum->cmp ? 1 : 0;
}

zdg_status zdg_spectrum_comparison(const zdg_spectrum* spectrum,
                                   double* max_deviation, int32_t* structural_ok,
                                   int32_t* pass) {
  if (!spectrum || !max_deviation || !structural_ok || !pass)
    return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  if (!spectrum->cmp)
    return set_error("no comparison: method was not ZDG_METHOD_BOTH", ZDG_ERROR_DOMAIN);
  *max_deviation = spectrum->cmp->max_deviation;
  *structural_ok = spectrum->cmp->structural_ok ? 1 : 0;
  *pass = spectrum->cmp->pass ? 1 : 0;
  return ZDG_OK;
}

int64_t zdg_spectrum_comparison_detail(const zdg_spectrum* spectrum, char* buf,
                                       size_t cap) {
  if (!spectrum) return set_error("spectrum is NULL", ZDG_ERROR_NULL_ARGUMENT);
  if (!spectrum->cmp)
    return set_error("no comparison: method was not ZDG_METHOD_BOTH", ZDG_ERROR_DOMAIN);
  return write_string(spectrum->cmp->detail, buf, cap);
}

zdg_status zdg_spectrum_energy(const zdg_spectrum* spectrum, double* value,
                               int32_t* adjacency_flag) {
  if (!spectrum || !value) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  return guarded([&] {
    EnergyResult r = graph_energy(spectrum->spec);
    *value = r.value;
    if (adjacency_flag) *adjacency_flag = r.adjacency ? 1 : 0;
  });
}

/* ---- verify ---- */

zdg_status zdg_verify_run(const zdg_params* params, double tol, uint64_t dense_budget,
                          zdg_fault fault, zdg_verify_report** out) {
  if (!params || !out) return set_error("NULL argument", ZDG_ERROR_NULL_ARGUMENT);
  *out = nullptr;
  return guarded([&] {
    VerifyOptions opts;
    if (tol > 0) opts.tol = tol;
    if (dense_budget > 0) opts.dense_budget = dense_budget;
    opts.fault = fault == ZDG_FAULT_CORRUPT_QUOTIENT ? Fault::CorruptQuotient
                                                     : Fault::None;
    *out = new zdg_verify_report{run_verification(params->rp, opts)};
  });
}

void zdg_verify_destroy(zdg_verify_report* report) { delete report; }

uint64_t zdg_verify_check_count(const zdg_verify_report* report) {
  return report ? report->r.checks.size() : 0;
}

int64_t zdg_verify_check_name(const zdg_verify_report* report, uint64_t index,
                              char* buf, size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  if (index >= report->r.checks.size())
    return set_error("check index out of range", ZDG_ERROR_DOMAIN);
  return write_string(report->r.checks[index].name, buf, cap);
}

int32_t zdg_verify_check_passed(const zdg_verify_report* report, uint64_t index) {
  if (!report) return ZDG_ERROR_NULL_ARGUMENT;
  if (index >= report->r.checks.size())
    return set_error("check index out of range", ZDG_ERROR_DOMAIN);
  return report->r.checks[index].passed ? 1 : 0;
}

int64_t zdg_verify_check_detail(const zdg_verify_report* report, uint64_t index,
                                char* buf, size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  if (index >= report->r.checks.size())
    return set_error("check index out of range", ZDG_ERROR_DOMAIN);
  return write_string(report->r.checks[index].detail, buf, cap);
}

int32_t zdg_verify_all_passed(const zdg_verify_report* report) {
  if (!report) return ZDG_ERROR_NULL_ARGUMENT;
  return report->r.all_passed ? 1 : 0;
}

int64_t zdg_verify_fault(const zdg_verify_report* report, char* buf, size_t cap) {
  if (!report) return set_error("report is NULL", ZDG_ERROR_NULL_ARGUMENT);
  return write_string(report->r.fault, buf, cap);
}

}  // extern "C"
