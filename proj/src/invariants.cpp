#include "zdg/invariants.hpp"

#include <algorithm>
#include <queue>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

// Adjacency as bitsets, 64 vertices per word.
struct BitGraph {
  size_t n = 0;
  size_t words = 0;
  std::vector<uint64_t> rows;  // n * words

  explicit BitGraph(const std::vector<std::vector<uint32_t>>& adj)
      : n(adj.size()), words((adj.size() + 63) / 64), rows(adj.size() * words, 0) {
    for (size_t u = 0; u < n; ++u) {
      for (uint32_t v : adj[u]) set(u, v);
    }
  }

  void set(size_t u, size_t v) { rows[u * words + v / 64] |= uint64_t(1) << (v % 64); }
  bool get(size_t u, size_t v) const {
    return rows[u * words + v / 64] >> (v % 64) & 1;
  }
  const uint64_t* row(size_t u) const { return &rows[u * words]; }
};

struct CliqueSolver {
  const BitGraph& g;
  int64_t best = 0;
  std::vector<uint64_t> scratch;

  explicit CliqueSolver(const BitGraph& graph) : g(graph) {}

  // Greedy colouring of the candidate set; vertices come back ordered by
  // colour so the branch loop can cut off early.
  void colour_sort(const std::vector<uint32_t>& cand, std::vector<uint32_t>& order,
                   std::vector<int>& colour) {
    order.clear();
    colour.clear();
    std::vector<std::vector<uint32_t>> classes;
    for (uint32_t v : cand) {
      size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (uint32_t u : classes[k]) {
          if (g.get(v, u)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    for (size_t k = 0; k < classes.size(); ++k) {
      for (uint32_t v : classes[k]) {
        order.push_back(v);
        colour.push_back(static_cast<int>(k) + 1);
      }
    }
  }

  void expand(std::vector<uint32_t>& cand, int64_t depth) {
    std::vector<uint32_t> order;
    std::vector<int> colour;
    colour_sort(cand, order, colour);
    for (size_t idx = order.size(); idx-- > 0;) {
      if (depth + colour[idx] <= best) return;
      uint32_t v = order[idx];
      std::vector<uint32_t> next;
      for (size_t j = 0; j < idx; ++j) {
        if (g.get(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        best = std::max(best, depth + 1);
      } else {
        expand(next, depth + 1);
      }
    }
  }
};

}  // namespace

int64_t max_clique_exact(const std::vector<std::vector<uint32_t>>& adj) {
  if (adj.empty()) return 0;
  BitGraph g(adj);
  CliqueSolver solver(g);
  std::vector<uint32_t> all(adj.size());
  for (size_t i = 0; i < adj.size(); ++i) all[i] = static_cast<uint32_t>(i);
  solver.best = 1;
  solver.expand(all, 0);
  return solver.best;
}

int64_t independence_number_exact(const std::vector<std::vector<uint32_t>>& adj) {
  const size_t n = adj.size();
  if (n == 0) return 0;
  BitGraph g(adj);
  std::vector<std::vector<uint32_t>> comp(n);
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = 0; v < n; ++v) {
      if (u != v && !g.get(u, v)) comp[u].push_back(static_cast<uint32_t>(v));
    }
  }
  return max_clique_exact(comp);
}

namespace {

// Branch and bound over closed neighbourhood masks, n <= 64.
struct DomSolver {
  size_t n;
  std::vector<uint64_t> closed;  // N[v]
  uint64_t full;
  int64_t best;

  void search(uint64_t dominated, int64_t used) {
    if (used >= best) return;
    if (dominated == full) {
      best = used;
      return;
    }
    // Branch on the lowest undominated vertex: some chosen vertex must be in
    // its closed neighbourhood.
    size_t v = static_cast<size_t>(__builtin_ctzll(~dominated & full));
    for (size_t u = 0; u < n; ++u) {
      if (closed[u] >> v & 1) search(dominated | closed[u], used + 1);
    }
  }
};

}  // namespace

int64_t domination_number_exact(const std::vector<std::vector<uint32_t>>& adj) {
  const size_t n = adj.size();
  if (n == 0) return 0;
  if (n > 64) fail(ErrorCode::BudgetExceeded, "domination brute force limited to 64 vertices");
  DomSolver s;
  s.n = n;
  s.full = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  s.closed.assign(n, 0);
  for (size_t u = 0; u < n; ++u) {
    s.closed[u] = uint64_t(1) << u;
    for (uint32_t v : adj[u]) s.closed[u] |= uint64_t(1) << v;
  }
  s.best = static_cast<int64_t>(n);
  s.search(0, 0);
  return s.best;
}

std::vector<int32_t> bfs_distances(const std::vector<std::vector<uint32_t>>& adj,
                                   uint32_t source) {
  std::vector<int32_t> dist(adj.size(), -1);
  std::queue<uint32_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop();
    for (uint32_t v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

int64_t diameter_bfs(const std::vector<std::vector<uint32_t>>& adj) {
  const size_t n = adj.size();
  if (n == 0) fail(ErrorCode::Domain, "diameter of the empty graph is undefined");
  int64_t diam = 0;
  for (uint32_t s = 0; s < n; ++s) {
    std::vector<int32_t> dist = bfs_distances(adj, s);
    for (int32_t d : dist) {
      if (d < 0) fail(ErrorCode::Disconnected, "graph is disconnected");
      diam = std::max<int64_t>(diam, d);
    }
  }
  return diam;
}

GirthValue girth_bfs(const std::vector<std::vector<uint32_t>>& adj) {
  const size_t n = adj.size();
  int64_t best = -1;
  // BFS from every root; a non-tree edge seen from u to an already
  // discovered w closes a cycle of length dist[u] + dist[w] + 1 through the
  // root. The minimum over all roots is the girth.
  std::vector<int32_t> dist(n);
  std::vector<int32_t> parent(n);
  for (uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<uint32_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop();
      for (uint32_t v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int32_t>(u);
          q.push(v);
        } else if (static_cast<int32_t>(v) != parent[u]) {
          int64_t len = int64_t(dist[u]) + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return GirthValue{false, 0};
  return GirthValue{true, best};
}

}  // namespace zdg
