#pragma once

// Immutable simple undirected graph with the distance/ball/connectivity
// primitives everything else is built on. Vertices are dense ints 0..n-1,
// neighbor lists are kept sorted so every iteration order downstream is
// deterministic.

#include <algorithm>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gburn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects self-loops, parallel
    /// edges and out-of-range endpoints.
    Graph(int vertex_count, const std::vector<Edge>& edges)
        : n_(vertex_count), adj_(static_cast<size_t>(std::max(vertex_count, 0))) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop not allowed");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        m_ = static_cast<int>(edges.size());
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw std::invalid_argument("parallel edge not allowed");
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Edge list in normalized (u < v) lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Distances from the nearest vertex of a source set. Unreachable vertices
/// carry a sentinel, never a large finite value.
struct DistanceMap {
    static constexpr int kUnreachable = -1;

    std::vector<Vertex> sources;  // sorted
    std::vector<int> dist;        // per vertex; kUnreachable if no path

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

inline int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

/// BFS from a set of sources; exact hop distance to the nearest source.
inline DistanceMap multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources) {
    if (sources.empty()) throw std::invalid_argument("empty source set");
    DistanceMap dm;
    dm.sources = sources;
    std::sort(dm.sources.begin(), dm.sources.end());
    dm.sources.erase(std::unique(dm.sources.begin(), dm.sources.end()), dm.sources.end());
    dm.dist.assign(g.vertex_count(), DistanceMap::kUnreachable);
    std::queue<Vertex> q;
    for (Vertex s : dm.sources) {
        g.check_vertex(s);
        dm.dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dm.dist[w] == DistanceMap::kUnreachable) {
                dm.dist[w] = dm.dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dm;
}

/// All vertices within the given hop radius of the center, sorted.
inline std::vector<Vertex> ball(const Graph& g, Vertex center, int radius) {
    g.check_vertex(center);
    if (radius < 0) throw std::invalid_argument("negative radius");
    // truncated BFS; avoids touching the rest of the graph for small radii
    std::vector<int> dist(g.vertex_count(), DistanceMap::kUnreachable);
    std::queue<Vertex> q;
    dist[center] = 0;
    q.push(center);
    std::vector<Vertex> out;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        out.push_back(u);
        if (dist[u] == radius) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == DistanceMap::kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    DistanceMap dm = multi_source_bfs(g, {0});
    return std::all_of(dm.dist.begin(), dm.dist.end(),
                       [](int d) { return d != DistanceMap::kUnreachable; });
}

/// Induced subgraph plus the relabeling in both directions.
/// to_sub[old] is -1 for vertices outside the set.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_sub;   // original index -> subgraph index
    std::vector<Vertex> to_orig;  // subgraph index -> original index
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    if (s.empty()) throw std::invalid_argument("empty vertex set");
    InducedSubgraph result;
    result.to_orig = s;
    std::sort(result.to_orig.begin(), result.to_orig.end());
    result.to_orig.erase(std::unique(result.to_orig.begin(), result.to_orig.end()),
                         result.to_orig.end());
    result.to_sub.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < result.to_orig.size(); ++i) {
        g.check_vertex(result.to_orig[i]);
        result.to_sub[result.to_orig[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex u : result.to_orig)
        for (Vertex v : g.neighbors(u))
            if (u < v && result.to_sub[v] != -1)
                edges.emplace_back(result.to_sub[u], result.to_sub[v]);
    result.graph = Graph(static_cast<int>(result.to_orig.size()), edges);
    return result;
}

}  // namespace gburn
