#ifndef ZDG_STRUCTURE_HPP
#define ZDG_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

// Vertices of the zero-divisor graph split by mindeg into levels
// V_1, ..., V_{c-1}. |V_i| = (p-1) p^(c-1-i); V_i is a clique iff 2i >= c
// (loops discarded), independent otherwise; V_i ~ V_j iff i + j >= c; every
// V_i vertex has degree p^i - 1 - [2i >= c].
struct LevelInfo {
  int index = 0;
  Int size;
  Int degree;
  bool clique = false;
};

class LevelPartition {
 public:
  explicit LevelPartition(const RingParams& rp);

  const RingParams& params() const { return params_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<LevelInfo>& levels() const { return levels_; }
  const LevelInfo& level(int i) const;  // 1-based, throws Domain off-range

  // Number of edges, (1/2) sum n_i d_i.
  const Int& edge_count() const { return edge_count_; }

 private:
  RingParams params_;
  std::vector<LevelInfo> levels_;
  Int edge_count_;
};

LevelPartition level_partition(const RingParams& rp);

// The level adjacency rule i + j >= c (i == j allowed: clique levels).
// Throws Domain when an index is outside 1..c-1.
bool adjacent_levels(int i, int j, const RingParams& rp);

// Explicit graph on the enumerated zero divisors. Vertex ids follow
// enumerate_zero_divisors order; the edge list is sorted with u < v.
struct GraphInstance {
  int64_t p = 0;
  int64_t c = 0;
  std::vector<RingElement> labels;
  std::vector<uint16_t> vertex_level;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  size_t vertex_count() const { return labels.size(); }
  size_t edge_count() const { return edges.size(); }
  std::vector<std::vector<uint32_t>> adjacency_lists() const;
};

// Builds edges from the level rule i + j >= c.
GraphInstance build_graph_by_rule(const RingParams& rp);

// Builds edges by multiplying ring elements (fg = 0). Independent of the
// level rule; used as the oracle the rule-based build is checked against.
GraphInstance build_graph_by_ring(const RingParams& rp);

// Girth as a value: finite with girth >= 3, or infinite (forest).
struct GirthValue {
  bool finite = false;
  int64_t value = 0;

  std::string str() const { return finite ? std::to_string(value) : "infinite"; }
  bool operator==(const GirthValue&) const = default;
};

struct BruteField {
  bool computed = false;
  Int value;           // numeric fields
  GirthValue girth;    // only for the girth field
};

// Closed-form structural invariants, with brute-force cross-checks filled in
// when the instance fits the corresponding budget. Degenerate cases (tiny
// graphs) report the true value and flag disagreement with the generic
// diameter-2 / girth-3 claims instead of hiding it.
struct StructureReport {
  int64_t p = 0;
  int64_t c = 0;
  int special_level = 0;
  Int order;
  Int size;
  std::vector<LevelInfo> levels;

  Int clique_number;         // p^s - 1 (c even), p^s (c odd)
  Int independence_number;   // p^(c-1) - p^s, plus 1 when c is even
  Int domination_number;     // 1 (level c-1 vertices are universal)
  Int universal_vertices;    // p - 1
  int64_t diameter = 0;      // 2 generically; 0 or 1 for the c = 2 graphs
  GirthValue girth;          // 3 generically; infinite for the tiny cases

  bool generic_diameter_holds = false;  // diameter == 2
  bool generic_girth_holds = false;     // girth == 3

  BruteField brute_clique;
  BruteField brute_independence;
  BruteField brute_domination;
  BruteField brute_diameter;
  BruteField brute_girth;
  bool brute_all_agree = true;
  std::vector<std::string> disagreements;
};

struct StructureOptions {
  uint64_t clique_budget = 200;
  uint64_t independence_budget = 60;
  uint64_t domination_budget = 60;
  bool run_brute = true;
};

// Closed forms only (no explicit graph required).
StructureReport structure_report_closed(const LevelPartition& lp);

// Closed forms plus brute-force cross-checks on the explicit graph, within
// the budgets in StructureOptions (diameter/girth are BFS-checked whenever
// the graph itself is available).
StructureReport structure_report(const GraphInstance& g, const LevelPartition& lp,
                                 const StructureOptions& opt = {});

}  // namespace zdg

#endif
