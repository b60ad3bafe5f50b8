#include "zdg/structure.hpp"

#include <algorithm>

#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"

namespace zdg {

LevelPartition::LevelPartition(const RingParams& rp) : params_(rp) {
  const int64_t p = rp.p();
  const int64_t c = rp.c();
  levels_.reserve(static_cast<size_t>(c - 1));
  Int degree_sum = 0;
  for (int64_t i = 1; i <= c - 1; ++i) {
    LevelInfo info;
    info.index = static_cast<int>(i);
    info.size = Int(p - 1) * ipow(p, c - 1 - i);
    info.clique = 2 * i >= c;
    info.degree = ipow(p, i) - 1 - (info.clique ? 1 : 0);
    degree_sum += info.size * info.degree;
    levels_.push_back(std::move(info));
  }
  edge_count_ = degree_sum / 2;
}

const LevelInfo& LevelPartition::level(int i) const {
  if (i < 1 || i > level_count())
    fail(ErrorCode::Domain, "level index " + std::to_string(i) +
                                " outside 1.." + std::to_string(level_count()));
  return levels_[static_cast<size_t>(i - 1)];
}

LevelPartition level_partition(const RingParams& rp) { return LevelPartition(rp); }

bool adjacent_levels(int i, int j, const RingParams& rp) {
  const int top = static_cast<int>(rp.c()) - 1;
  if (i < 1 || i > top || j < 1 || j > top)
    fail(ErrorCode::Domain, "level index outside 1.." + std::to_string(top));
  return i + j >= rp.c();
}

std::vector<std::vector<uint32_t>> GraphInstance::adjacency_lists() const {
  std::vector<std::vector<uint32_t>> adj(vertex_count());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

namespace {

GraphInstance graph_shell(const RingParams& rp) {
  GraphInstance g;
  g.p = rp.p();
  g.c = rp.c();
  g.labels = enumerate_zero_divisors(rp);
  g.vertex_level.reserve(g.labels.size());
  for (const RingElement& e : g.labels)
    g.vertex_level.push_back(static_cast<uint16_t>(mindeg(e, rp)));
  return g;
}

}  // namespace

GraphInstance build_graph_by_rule(const RingParams& rp) {
  GraphInstance g = graph_shell(rp);
  const size_t n = g.vertex_count();
  const int64_t c = rp.c();
  // Levels are contiguous ascending blocks in the vertex order, and u ~ v
  // iff level(u) + level(v) >= c, so the partners of u form a suffix of the
  // vertex range. This keeps the build linear in the output size.
  std::vector<size_t> offset(static_cast<size_t>(c) + 1, n);
  for (size_t v = n; v-- > 0;) offset[g.vertex_level[v]] = v;
  Int m = level_partition(rp).edge_count();
  if (fits_uint64(m)) g.edges.reserve(m.convert_to<size_t>());
  for (uint32_t u = 0; u < n; ++u) {
    const int64_t partner = c - g.vertex_level[u];
    size_t start = std::max<size_t>(u + 1, offset[static_cast<size_t>(partner)]);
    for (size_t v = start; v < n; ++v)
      g.edges.emplace_back(u, static_cast<uint32_t>(v));
  }
  return g;
}

GraphInstance build_graph_by_ring(const RingParams& rp) {
  GraphInstance g = graph_shell(rp);
  const size_t n = g.vertex_count();
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      if (is_zero(multiply(g.labels[u], g.labels[v], rp)))
        g.edges.emplace_back(u, v);
    }
  }
  return g;
}

namespace {

void fill_closed_forms(StructureReport& r, const LevelPartition& lp) {
  const RingParams& rp = lp.params();
  const int64_t p = rp.p();
  const int64_t c = rp.c();
  const int s = rp.special_level();
  r.p = p;
  r.c = c;
  r.special_level = s;
  r.order = rp.graph_order();
  r.size = lp.edge_count();
  r.levels = lp.levels();

  const Int ps = ipow(p, s);
  r.clique_number = rp.even_truncation() ? ps - 1 : ps;
  r.independence_number = ipow(p, c - 1) - ps + (rp.even_truncation() ? 1 : 0);
  r.domination_number = 1;
  r.universal_vertices = p - 1;

  if (c == 2) {
    r.diameter = (p == 2) ? 0 : 1;
    r.girth = (p >= 5) ? GirthValue{true, 3} : GirthValue{false, 0};
  } else if (c == 3 && p == 2) {
    r.diameter = 2;
    r.girth = GirthValue{false, 0};
  } else {
    r.diameter = 2;
    r.girth = GirthValue{true, 3};
  }
  r.generic_diameter_holds = r.diameter == 2;
  r.generic_girth_holds = r.girth == GirthValue{true, 3};
}

void record(StructureReport& r, const char* what, const std::string& closed,
            const std::string& brute, bool agree) {
  if (agree) return;
  r.brute_all_agree = false;
  r.disagreements.push_back(std::string(what) + ": closed form " + closed +
                            ", brute force " + brute);
}

}  // namespace

StructureReport structure_report_closed(const LevelPartition& lp) {
  StructureReport r;
  fill_closed_forms(r, lp);
  return r;
}

StructureReport structure_report(const GraphInstance& g, const LevelPartition& lp,
                                 const StructureOptions& opt) {
  StructureReport r;
  fill_closed_forms(r, lp);
  if (!opt.run_brute) return r;

  const uint64_t n = g.vertex_count();
  const auto adj = g.adjacency_lists();

  if (n <= opt.clique_budget) {
    r.brute_clique.computed = true;
    r.brute_clique.value = max_clique_exact(adj);
    record(r, "clique number", to_string(r.clique_number),
           to_string(r.brute_clique.value),
           r.brute_clique.value == r.clique_number);
  }
  if (n <= opt.independence_budget) {
    r.brute_independence.computed = true;
    r.brute_independence.value = independence_number_exact(adj);
    record(r, "independence number", to_string(r.independence_number),
           to_string(r.brute_independence.value),
           r.brute_independence.value == r.independence_number);
  }
  if (n <= opt.domination_budget && n <= 64) {
    r.brute_domination.computed = true;
    r.brute_domination.value = domination_number_exact(adj);
    record(r, "domination number", to_string(r.domination_number),
           to_string(r.brute_domination.value),
           r.brute_domination.value == r.domination_number);
  }
  // BFS checks are cheap relative to the solvers above; cap by vertex count
  // so all-pairs BFS stays at desk scale.
  if (n >= 1 && n <= 1000) {
    r.brute_diameter.computed = true;
    r.brute_diameter.value = diameter_bfs(adj);
    record(r, "diameter", std::to_string(r.diameter),
           to_string(r.brute_diameter.value),
           r.brute_diameter.value == r.diameter);
    r.brute_girth.computed = true;
    r.brute_girth.girth = girth_bfs(adj);
    record(r, "girth", r.girth.str(), r.brute_girth.girth.str(),
           r.brute_girth.girth == r.girth);
  }
  return r;
}

}  // namespace zdg
