#ifndef ZDG_INVARIANTS_HPP
#define ZDG_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "zdg/structure.hpp"

namespace zdg {

// Exact brute-force graph invariants, independent of the closed forms.
// Inputs are plain adjacency lists so these never touch the level rule.

// Exact maximum clique (branch and bound with greedy colouring bound).
int64_t max_clique_exact(const std::vector<std::vector<uint32_t>>& adj);

// Exact independence number (max clique of the complement).
int64_t independence_number_exact(const std::vector<std::vector<uint32_t>>& adj);

// Exact minimum dominating set size. Requires n <= 64.
int64_t domination_number_exact(const std::vector<std::vector<uint32_t>>& adj);

// BFS diameter. Throws Disconnected when the graph is not connected
// (single-vertex graphs have diameter 0).
int64_t diameter_bfs(const std::vector<std::vector<uint32_t>>& adj);

// Exact girth via BFS from every vertex.
GirthValue girth_bfs(const std::vector<std::vector<uint32_t>>& adj);

// BFS distances from one source, -1 for unreachable.
std::vector<int32_t> bfs_distances(const std::vector<std::vector<uint32_t>>& adj,
                                   uint32_t source);

}  // namespace zdg

#endif
