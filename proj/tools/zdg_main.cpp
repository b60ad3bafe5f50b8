// Command-line front end for the zero-divisor graph spectra library.
// Talks to the core exclusively through the public C API in zdg/zdg.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdg/zdg.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(zdg_status st) {
  return st == ZDG_ERROR_BUDGET_EXCEEDED ? kExitBudget : kExitUsage;
}

[[noreturn]] void die(zdg_status st) {
  std::cerr << "error: " << zdg_last_error() << "\n";
  std::exit(exit_code_for(st));
}

// Fetch a string through the snprintf-style C API (query length, then fill).
template <typename F>
std::string api_string(F&& getter) {
  int64_t need = getter(nullptr, 0);
  if (need < 0) die(static_cast<zdg_status>(need));
  std::string s(static_cast<size_t>(need), '\0');
  if (need > 0) getter(s.data(), s.size() + 1);
  return s;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct ParamsHandle {
  zdg_params* h = nullptr;
  ~ParamsHandle() { zdg_params_destroy(h); }
};

struct GraphHandle {
  zdg_graph* h = nullptr;
  ~GraphHandle() { zdg_graph_destroy(h); }
};

struct SpectrumHandle {
  zdg_spectrum* h = nullptr;
  ~SpectrumHandle() { zdg_spectrum_destroy(h); }
};

struct StructureHandle {
  zdg_structure_report* h = nullptr;
  ~StructureHandle() { zdg_structure_destroy(h); }
};

struct VerifyHandle {
  zdg_verify_report* h = nullptr;
  ~VerifyHandle() { zdg_verify_destroy(h); }
};

struct Options {
  int64_t p = 0;
  int64_t c = 0;
  std::string matrix = "laplacian";
  std::string method = "closed";
  std::string alpha;
  std::string format;
  std::string out;
  std::string inject;
  std::string builder = "rule";
  double tol = 1e-8;
};

uint64_t dense_budget_from_env() {
  const char* env = std::getenv("ZDG_DENSE_BUDGET");
  if (!env || !*env) return 0;  // 0 = library default
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::cerr << "error: ZDG_DENSE_BUDGET must be a nonnegative integer\n";
    std::exit(kExitUsage);
  }
  return static_cast<uint64_t>(v);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        std::cerr << "error: cannot open output file " << path << "\n";
        std::exit(kExitUsage);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ParamsHandle make_params(const Options& o) {
  ParamsHandle params;
  zdg_status st = zdg_params_create(o.p, o.c, &params.h);
  if (st != ZDG_OK) die(st);
  return params;
}

ordered_json params_json(const zdg_params* params) {
  ordered_json j;
  j["p"] = zdg_params_p(params);
  j["c"] = zdg_params_c(params);
  j["order"] = api_string([&](char* b, size_t n) { return zdg_params_order(params, b, n); });
  return j;
}

zdg_matrix_kind parse_matrix(const std::string& name) {
  static const std::map<std::string, zdg_matrix_kind> kinds = {
      {"adjacency", ZDG_MATRIX_ADJACENCY},
      {"laplacian", ZDG_MATRIX_LAPLACIAN},
      {"signless", ZDG_MATRIX_SIGNLESS},
      {"a-alpha", ZDG_MATRIX_A_ALPHA},
      {"distance-laplacian", ZDG_MATRIX_DISTANCE_LAPLACIAN},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) {
    std::cerr << "error: unknown matrix kind \"" << name << "\"\n";
    std::exit(kExitUsage);
  }
  return it->second;
}

zdg_method parse_method(const std::string& name) {
  if (name == "closed") return ZDG_METHOD_CLOSED;
  if (name == "dense") return ZDG_METHOD_DENSE;
  if (name == "both") return ZDG_METHOD_BOTH;
  std::cerr << "error: unknown method \"" << name << "\"\n";
  std::exit(kExitUsage);
}

/* ---------- spectrum ---------- */

ordered_json spectrum_entries_json(const zdg_spectrum* spec) {
  ordered_json arr = ordered_json::array();
  uint64_t count = zdg_spectrum_entry_count(spec);
  for (uint64_t i = 0; i < count; ++i) {
    ordered_json e;
    e["value"] = api_string(
        [&](char* b, size_t n) { return zdg_spectrum_entry_value(spec, i, b, n); });
    e["multiplicity"] = api_string([&](char* b, size_t n) {
      return zdg_spectrum_entry_multiplicity(spec, i, b, n);
    });
    int32_t kind = zdg_spectrum_entry_kind(spec, i);
    e["kind"] = kind == ZDG_ENTRY_EXACT    ? "exact"
                : kind == ZDG_ENTRY_AFFINE ? "affine"
                                           : "numeric";
    e["residual_bound"] = zdg_spectrum_entry_residual(spec, i);
    arr.push_back(std::move(e));
  }
  return arr;
}

void print_spectrum_text(std::ostream& os, const Options& o, const zdg_params* params,
                         const zdg_spectrum* spec, const std::string& method,
                         const std::string& note) {
  os << "p=" << o.p << " c=" << o.c << " order="
     << api_string([&](char* b, size_t n) { return zdg_params_order(params, b, n); })
     << "\n";
  os << "matrix=" << o.matrix << " method=" << method;
  if (!o.alpha.empty()) os << " alpha=" << o.alpha;
  os << "\n";
  if (!note.empty()) os << "note: " << note << "\n";
  os << "eigenvalue multiplicity kind\n";
  uint64_t count = zdg_spectrum_entry_count(spec);
  for (uint64_t i = 0; i < count; ++i) {
    int32_t kind = zdg_spectrum_entry_kind(spec, i);
    os << api_string(
              [&](char* b, size_t n) { return zdg_spectrum_entry_value(spec, i, b, n); })
       << " "
       << api_string([&](char* b, size_t n) {
            return zdg_spectrum_entry_multiplicity(spec, i, b, n);
          })
       << " "
       << (kind == ZDG_ENTRY_EXACT    ? "exact"
           : kind == ZDG_ENTRY_AFFINE ? "affine"
                                      : "numeric")
       << "\n";
  }
  if (int32_t tail = zdg_spectrum_symbolic_tail_dim(spec); tail > 0)
    os << "symbolic_tail_dim=" << tail << "\n";
  os << "total_multiplicity="
     << api_string(
            [&](char* b, size_t n) { return zdg_spectrum_total_multiplicity(spec, b, n); })
     << "\n";
  os << "residual_bound=" << fmt_double(zdg_spectrum_residual_bound(spec)) << "\n";
  if (zdg_spectrum_comparison_available(spec) == 1) {
    double dev = 0;
    int32_t structural = 0, pass = 0;
    zdg_spectrum_comparison(spec, &dev, &structural, &pass);
    os << "comparison=" << (pass ? "pass" : "FAIL")
       << " max_deviation=" << fmt_double(dev) << "\n";
  }
}

void print_spectrum_csv(std::ostream& os, const zdg_spectrum* spec) {
  os << "eigenvalue,multiplicity,kind\n";
  uint64_t count = zdg_spectrum_entry_count(spec);
  for (uint64_t i = 0; i < count; ++i) {
    int32_t kind = zdg_spectrum_entry_kind(spec, i);
    os << api_string(
              [&](char* b, size_t n) { return zdg_spectrum_entry_value(spec, i, b, n); })
       << ","
       << api_string([&](char* b, size_t n) {
            return zdg_spectrum_entry_multiplicity(spec, i, b, n);
          })
       << ","
       << (kind == ZDG_ENTRY_EXACT    ? "exact"
           : kind == ZDG_ENTRY_AFFINE ? "affine"
                                      : "numeric")
       << "\n";
  }
}

int run_spectrum(const Options& o) {
  ParamsHandle params = make_params(o);
  zdg_matrix_kind kind = parse_matrix(o.matrix);
  zdg_method method = parse_method(o.method);
  uint64_t budget = dense_budget_from_env();

  if (!o.alpha.empty() && kind != ZDG_MATRIX_A_ALPHA)
    std::cerr << "note: --alpha is ignored for matrix \"" << o.matrix << "\"\n";
  if (!o.alpha.empty() && o.alpha.find('.') != std::string::npos)
    std::cerr << "note: decimal alpha \"" << o.alpha
              << "\" is interpreted as an exact rational\n";

  const char* alpha_arg =
      (kind == ZDG_MATRIX_A_ALPHA && !o.alpha.empty()) ? o.alpha.c_str() : nullptr;

  SpectrumHandle spec;
  std::string method_used = o.method;
  std::string note;
  int exit_code = kExitOk;
  zdg_status st =
      zdg_spectrum_compute(params.h, kind, method, alpha_arg, o.tol, budget, &spec.h);
  if (st == ZDG_ERROR_BUDGET_EXCEEDED && method != ZDG_METHOD_CLOSED) {
    note = zdg_last_error();
    std::cerr << "note: " << note << "; falling back to the closed method\n";
    st = zdg_spectrum_compute(params.h, kind, ZDG_METHOD_CLOSED, alpha_arg, o.tol,
                              budget, &spec.h);
    method_used = "closed";
    exit_code = kExitBudget;
  }
  if (st != ZDG_OK) die(st);

  Output out(o.out);
  std::ostream& os = out.stream();
  std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json") {
    ordered_json j;
    j["params"] = params_json(params.h);
    j["matrix"] = o.matrix;
    j["method"] = method_used;
    if (alpha_arg) j["alpha"] = o.alpha;
    if (!note.empty()) j["note"] = note;
    j["spectrum"] = spectrum_entries_json(spec.h);
    if (int32_t tail = zdg_spectrum_symbolic_tail_dim(spec.h); tail > 0)
      j["symbolic_tail_dim"] = tail;
    j["total_multiplicity"] = api_string([&](char* b, size_t n) {
      return zdg_spectrum_total_multiplicity(spec.h, b, n);
    });
    j["residual_bound"] = zdg_spectrum_residual_bound(spec.h);
    if (zdg_spectrum_comparison_available(spec.h) == 1) {
      double dev = 0;
      int32_t structural = 0, pass = 0;
      zdg_spectrum_comparison(spec.h, &dev, &structural, &pass);
      ordered_json cmp;
      cmp["pass"] = pass == 1;
      cmp["structural_ok"] = structural == 1;
      cmp["max_deviation"] = dev;
      cmp["detail"] = api_string([&](char* b, size_t n) {
        return zdg_spectrum_comparison_detail(spec.h, b, n);
      });
      j["comparison"] = std::move(cmp);
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    print_spectrum_csv(os, spec.h);
  } else if (format == "text") {
    print_spectrum_text(os, o, params.h, spec.h, method_used, note);
  } else {
    std::cerr << "error: unknown format \"" << format << "\" for spectrum\n";
    return kExitUsage;
  }

  if (zdg_spectrum_comparison_available(spec.h) == 1) {
    double dev = 0;
    int32_t structural = 0, pass = 0;
    zdg_spectrum_comparison(spec.h, &dev, &structural, &pass);
    if (pass != 1) return kExitVerifyFailed;
  }
  return exit_code;
}

/* ---------- structure ---------- */

const char* kFieldNames[] = {"order",      "size",       "clique_number",
                             "independence_number", "domination_number", "diameter",
                             "girth",      "universal_vertices"};
const zdg_structure_field kFields[] = {
    ZDG_STRUCT_ORDER,       ZDG_STRUCT_SIZE,     ZDG_STRUCT_CLIQUE,
    ZDG_STRUCT_INDEPENDENCE, ZDG_STRUCT_DOMINATION, ZDG_STRUCT_DIAMETER,
    ZDG_STRUCT_GIRTH,       ZDG_STRUCT_UNIVERSAL};

int run_structure(const Options& o) {
  ParamsHandle params = make_params(o);
  StructureHandle rep;
  zdg_status st = zdg_structure_compute(params.h, 1, &rep.h);
  if (st != ZDG_OK) die(st);

  Output out(o.out);
  std::ostream& os = out.stream();
  std::string format = o.format.empty() ? "text" : o.format;

  int32_t agree = zdg_structure_agreement(rep.h);
  if (format == "json") {
    ordered_json j;
    j["params"] = params_json(params.h);
    ordered_json levels = ordered_json::array();
    for (int32_t lvl = 1; lvl <= zdg_params_level_count(params.h); ++lvl) {
      ordered_json L;
      L["level"] = lvl;
      L["size"] = api_string(
          [&](char* b, size_t n) { return zdg_params_level_size(params.h, lvl, b, n); });
      L["degree"] = api_string([&](char* b, size_t n) {
        return zdg_params_level_degree(params.h, lvl, b, n);
      });
      L["clique"] = zdg_params_level_is_clique(params.h, lvl) == 1;
      levels.push_back(std::move(L));
    }
    j["levels"] = std::move(levels);
    ordered_json sj;
    for (size_t i = 0; i < std::size(kFields); ++i) {
      sj[kFieldNames[i]] = api_string([&](char* b, size_t n) {
        return zdg_structure_value(rep.h, kFields[i], b, n);
      });
    }
    sj["generic_diameter_holds"] = zdg_structure_generic_diameter_holds(rep.h) == 1;
    sj["generic_girth_holds"] = zdg_structure_generic_girth_holds(rep.h) == 1;
    j["report"] = std::move(sj);
    ordered_json bj;
    bool any_brute = false;
    for (size_t i = 0; i < std::size(kFields); ++i) {
      if (zdg_structure_brute_available(rep.h, kFields[i]) == 1) {
        any_brute = true;
        bj[kFieldNames[i]] = api_string([&](char* b, size_t n) {
          return zdg_structure_brute_value(rep.h, kFields[i], b, n);
        });
      }
    }
    if (any_brute) {
      bj["agreement"] = agree == 1;
      std::string dis = api_string(
          [&](char* b, size_t n) { return zdg_structure_disagreements(rep.h, b, n); });
      if (!dis.empty()) bj["disagreements"] = dis;
      j["brute_force"] = std::move(bj);
    }
    os << j.dump(2) << "\n";
  } else if (format == "text") {
    os << "p=" << o.p << " c=" << o.c << "\n";
    os << "level size degree clique\n";
    for (int32_t lvl = 1; lvl <= zdg_params_level_count(params.h); ++lvl) {
      os << lvl << " "
         << api_string([&](char* b, size_t n) {
              return zdg_params_level_size(params.h, lvl, b, n);
            })
         << " "
         << api_string([&](char* b, size_t n) {
              return zdg_params_level_degree(params.h, lvl, b, n);
            })
         << " " << (zdg_params_level_is_clique(params.h, lvl) == 1 ? "yes" : "no")
         << "\n";
    }
    for (size_t i = 0; i < std::size(kFields); ++i) {
      os << kFieldNames[i] << "=" << api_string([&](char* b, size_t n) {
        return zdg_structure_value(rep.h, kFields[i], b, n);
      });
      if (zdg_structure_brute_available(rep.h, kFields[i]) == 1) {
        os << " (brute=" << api_string([&](char* b, size_t n) {
          return zdg_structure_brute_value(rep.h, kFields[i], b, n);
        }) << ")";
      }
      os << "\n";
    }
    os << "generic_diameter_holds="
       << (zdg_structure_generic_diameter_holds(rep.h) == 1 ? "true" : "false") << "\n";
    os << "generic_girth_holds="
       << (zdg_structure_generic_girth_holds(rep.h) == 1 ? "true" : "false") << "\n";
    os << "brute_agreement=" << (agree == 1 ? "true" : "false") << "\n";
    std::string dis = api_string(
        [&](char* b, size_t n) { return zdg_structure_disagreements(rep.h, b, n); });
    if (!dis.empty()) os << "disagreements: " << dis << "\n";
  } else {
    std::cerr << "error: unknown format \"" << format << "\" for structure\n";
    return kExitUsage;
  }
  return agree == 1 ? kExitOk : kExitVerifyFailed;
}

/* ---------- verify ---------- */

int run_verify(const Options& o) {
  ParamsHandle params = make_params(o);
  zdg_fault fault = ZDG_FAULT_NONE;
  if (!o.inject.empty()) {
    if (o.inject == "corrupt-quotient") {
      fault = ZDG_FAULT_CORRUPT_QUOTIENT;
    } else {
      std::cerr << "error: unknown fault \"" << o.inject << "\"\n";
      return kExitUsage;
    }
  }
  VerifyHandle rep;
  zdg_status st =
      zdg_verify_run(params.h, o.tol, dense_budget_from_env(), fault, &rep.h);
  if (st != ZDG_OK) die(st);

  Output out(o.out);
  std::ostream& os = out.stream();
  std::string format = o.format.empty() ? "text" : o.format;
  uint64_t count = zdg_verify_check_count(rep.h);
  int32_t all = zdg_verify_all_passed(rep.h);

  if (format == "json") {
    ordered_json j;
    j["params"] = params_json(params.h);
    j["fault"] =
        api_string([&](char* b, size_t n) { return zdg_verify_fault(rep.h, b, n); });
    ordered_json checks = ordered_json::array();
    for (uint64_t i = 0; i < count; ++i) {
      ordered_json cj;
      cj["name"] = api_string(
          [&](char* b, size_t n) { return zdg_verify_check_name(rep.h, i, b, n); });
      cj["passed"] = zdg_verify_check_passed(rep.h, i) == 1;
      cj["detail"] = api_string(
          [&](char* b, size_t n) { return zdg_verify_check_detail(rep.h, i, b, n); });
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = all == 1;
    os << j.dump(2) << "\n";
  } else if (format == "text") {
    os << "p=" << o.p << " c=" << o.c << " order="
       << api_string([&](char* b, size_t n) { return zdg_params_order(params.h, b, n); })
       << " fault="
       << api_string([&](char* b, size_t n) { return zdg_verify_fault(rep.h, b, n); })
       << "\n";
    uint64_t passed = 0;
    for (uint64_t i = 0; i < count; ++i) {
      bool ok = zdg_verify_check_passed(rep.h, i) == 1;
      passed += ok ? 1 : 0;
      os << (ok ? "[PASS] " : "[FAIL] ")
         << api_string(
                [&](char* b, size_t n) { return zdg_verify_check_name(rep.h, i, b, n); })
         << ": "
         << api_string(
                [&](char* b, size_t n) { return zdg_verify_check_detail(rep.h, i, b, n); })
         << "\n";
    }
    os << "result: " << (all == 1 ? "ALL PASSED" : "FAILED") << " (" << passed << "/"
       << count << ")\n";
  } else {
    std::cerr << "error: unknown format \"" << format << "\" for verify\n";
    return kExitUsage;
  }
  return all == 1 ? kExitOk : kExitVerifyFailed;
}

/* ---------- export ---------- */

int run_export(const Options& o) {
  ParamsHandle params = make_params(o);
  GraphHandle graph;
  zdg_build_mode mode = o.builder == "ring" ? ZDG_BUILD_BY_RING : ZDG_BUILD_BY_RULE;
  zdg_status st = zdg_graph_build(params.h, mode, &graph.h);
  if (st != ZDG_OK) die(st);

  Output out(o.out);
  std::ostream& os = out.stream();
  std::string format = o.format.empty() ? "edgelist" : o.format;
  uint64_t n = zdg_graph_vertex_count(graph.h);
  uint64_t m = zdg_graph_edge_count(graph.h);

  if (format == "edgelist") {
    os << "# p " << o.p << " c " << o.c << " vertices " << n << " edges " << m << "\n";
    for (uint64_t v = 0; v < n; ++v) {
      os << "# vertex " << v << " level " << zdg_graph_vertex_level(graph.h, v)
         << " label "
         << api_string(
                [&](char* b, size_t k) { return zdg_graph_vertex_label(graph.h, v, b, k); })
         << "\n";
    }
    for (uint64_t e = 0; e < m; ++e) {
      uint64_t u = 0, v = 0;
      zdg_graph_edge(graph.h, e, &u, &v);
      os << u << " " << v << "\n";
    }
  } else if (format == "dot") {
    os << "graph zdg {\n";
    for (uint64_t v = 0; v < n; ++v) {
      os << "  " << v << " [label=\""
         << api_string([&](char* b, size_t k) {
              return zdg_graph_vertex_polynomial(graph.h, v, b, k);
            })
         << "\"];\n";
    }
    for (uint64_t e = 0; e < m; ++e) {
      uint64_t u = 0, v = 0;
      zdg_graph_edge(graph.h, e, &u, &v);
      os << "  " << u << " -- " << v << ";\n";
    }
    os << "}\n";
  } else if (format == "json") {
    ordered_json j;
    j["params"] = params_json(params.h);
    ordered_json verts = ordered_json::array();
    for (uint64_t v = 0; v < n; ++v) {
      ordered_json vj;
      vj["id"] = v;
      vj["level"] = zdg_graph_vertex_level(graph.h, v);
      vj["label"] = api_string(
          [&](char* b, size_t k) { return zdg_graph_vertex_label(graph.h, v, b, k); });
      vj["polynomial"] = api_string([&](char* b, size_t k) {
        return zdg_graph_vertex_polynomial(graph.h, v, b, k);
      });
      verts.push_back(std::move(vj));
    }
    j["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (uint64_t e = 0; e < m; ++e) {
      uint64_t u = 0, v = 0;
      zdg_graph_edge(graph.h, e, &u, &v);
      edges.push_back(ordered_json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    os << j.dump(2) << "\n";
  } else {
    std::cerr << "error: unknown format \"" << format << "\" for export\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graph spectra for Z_p[x]/<x^c>"};
  app.set_version_flag("--version", std::string(zdg_version()));
  app.require_subcommand(1);

  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-p,--p", o.p, "prime modulus p")->required();
    sub->add_option("-c,--c", o.c, "nilpotency index c (>= 2)")->required();
    sub->add_option("--format", o.format, "output format");
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
  };

  CLI::App* s_structure =
      app.add_subcommand("structure", "level structure and graph invariants");
  add_common(s_structure);

  CLI::App* s_spectrum =
      app.add_subcommand("spectrum", "eigenvalues of a graph matrix");
  add_common(s_spectrum);
  s_spectrum->add_option("--matrix", o.matrix,
                         "adjacency|laplacian|signless|a-alpha|distance-laplacian");
  s_spectrum->add_option("--method", o.method, "closed|dense|both");
  s_spectrum->add_option("--alpha", o.alpha,
                         "alpha for the a-alpha matrix (\"num/den\" or decimal)");
  s_spectrum->add_option("--tol", o.tol, "numeric comparison tolerance");

  CLI::App* s_verify =
      app.add_subcommand("verify", "cross-check closed forms against dense rebuilds");
  add_common(s_verify);
  s_verify->add_option("--tol", o.tol, "numeric comparison tolerance");
  s_verify->add_option("--inject", o.inject,
                       "inject a fault for negative-control runs (corrupt-quotient)");

  CLI::App* s_export = app.add_subcommand("export", "emit the graph itself");
  add_common(s_export);
  s_export->add_option("--builder", o.builder,
                       "construction to export: rule|ring (default rule)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (s_structure->parsed()) return run_structure(o);
  if (s_spectrum->parsed()) return run_spectrum(o);
  if (s_verify->parsed()) return run_verify(o);
  if (s_export->parsed()) return run_export(o);
  return kExitUsage;
}
