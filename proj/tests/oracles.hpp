#pragma once

// Reference implementations used only by tests. These stay independent of
// the library code paths they check: distances come from edge relaxation
// instead of BFS, and set searches run over bitmasks.

#include <cstdint>
#include <optional>
#include <vector>

#include "gburn/graph.hpp"

namespace testoracle {

// O(n*m) repeated relaxation; -1 marks unreachable.
inline std::vector<int> naive_distances(const gburn::Graph& g,
                                        const std::vector<int>& sources) {
    const int kInf = 1 << 28;
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInf);
    for (int s : sources) dist[s] = 0;
    auto edges = g.edges();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [u, v] : edges) {
            if (dist[u] + 1 < dist[v]) {
                dist[v] = dist[u] + 1;
                changed = true;
            }
            if (dist[v] + 1 < dist[u]) {
                dist[u] = dist[v] + 1;
                changed = true;
            }
        }
    }
    for (int& d : dist)
        if (d >= kInf) d = -1;
    return dist;
}

inline std::vector<uint32_t> adjacency_masks(const gburn::Graph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

inline bool mask_connected(const std::vector<uint32_t>& adj, uint32_t mask) {
    if (mask == 0) return false;
    uint32_t reached = mask & (~mask + 1);  // lowest set bit
    while (true) {
        uint32_t grown = reached;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (reached & (1u << v)) grown |= adj[v] & mask;
        if (grown == reached) break;
        reached = grown;
    }
    return reached == mask;
}

inline bool mask_dominates(const std::vector<uint32_t>& adj, uint32_t mask, uint32_t all) {
    uint32_t covered = mask;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (mask & (1u << v)) covered |= adj[v];
    return (covered & all) == all;
}

// Minimum connected dominating set by subset enumeration; smallest size,
// ties by smallest mask. Feasible to roughly n = 20.
inline std::optional<std::vector<int>> min_cds_bruteforce(const gburn::Graph& g) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    int best_size = n + 1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 1; mask <= all; ++mask) {
        int size = std::popcount(mask);
        if (size >= best_size) continue;
        if (!mask_dominates(adj, mask, all)) continue;
        if (!mask_connected(adj, mask)) continue;
        best_size = size;
        best_mask = mask;
    }
    if (best_size > n) return std::nullopt;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v)) out.push_back(v);
    return out;
}

// Calls fn for every labeled graph on n vertices (all edge subsets of K_n).
template <typename F>
inline void for_each_labeled_graph(int n, F&& fn) {
    std::vector<gburn::Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    uint64_t total = 1ull << slots.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        std::vector<gburn::Edge> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i)) edges.push_back(slots[i]);
        fn(gburn::Graph(n, edges));
    }
}

}  // namespace testoracle
