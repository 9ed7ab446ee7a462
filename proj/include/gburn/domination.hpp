#pragma once

// Connected hop-dominating sets and the two end-to-end burning pipelines.
//
// The 2-hop construction grows a connected set H from a start vertex: while
// some vertex sits at distance exactly 3 from H, attach a shortest 3-edge
// path to the smallest such vertex. Each step adds 3 vertices, and each step
// grows the set of vertices within distance 1 of H by at least k+1 (the new
// endpoint plus its neighbors were all at distance >= 2 before), so the
// process stops within floor(n/(k+1))-1 steps and |H| <= 3*floor(n/(k+1))-2
// where k is the minimum degree. Every vertex is then within 2 hops of H and
// a burning schedule for H lifts to the whole graph at +2 length.

#include <array>
#include <sstream>

#include "gburn/burning.hpp"
#include "gburn/graph.hpp"
#include "gburn/reduction.hpp"

namespace gburn {

/// Connected vertex set with every vertex of the host graph within `hops`.
struct HopDomWitness {
    std::vector<Vertex> vertices;  // sorted
    int hops = 0;
};

struct GrowthStep {
    int t;                         // 0-indexed step number
    Vertex vertex;                 // the distance-3 vertex reached
    std::array<Vertex, 4> path;    // 3-edge path, set side first
    int size_after;                // |H| after the step == 1 + 3(t+1)
    int within_one;                // #vertices within distance 1 of the new H
};

struct GrowthTrace {
    Vertex start = 0;
    int initial_within_one = 0;  // #vertices within distance 1 of {start}
    std::vector<GrowthStep> steps;
};

struct TwoHopResult {
    HopDomWitness witness;  // hops == 2
    GrowthTrace trace;
};

/// Smallest-index vertex of maximum degree; the default growth start.
inline Vertex max_degree_vertex(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

inline TwoHopResult connected_two_hop_dominating(const Graph& g, Vertex start) {
    g.check_vertex(start);
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");

    auto within_one = [&](const DistanceMap& dm) {
        int c = 0;
        for (int d : dm.dist) c += (d >= 0 && d <= 1);
        return c;
    };
    // smallest-index BFS-tree parent, for deterministic shortest paths
    auto parent_of = [&](const DistanceMap& dm, Vertex u) {
        for (Vertex w : g.neighbors(u))
            if (dm.dist[w] == dm.dist[u] - 1) return w;
        throw std::logic_error("no BFS parent");
    };

    TwoHopResult result;
    result.trace.start = start;
    std::vector<Vertex> h{start};
    DistanceMap dm = multi_source_bfs(g, h);
    result.trace.initial_within_one = within_one(dm);

    int t = 0;
    while (true) {
        Vertex target = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (dm.dist[v] == 3) {
                target = v;
                break;
            }
        }
        if (target == -1) break;  // farthest vertex is now within 2
        Vertex p2 = parent_of(dm, target);
        Vertex p1 = parent_of(dm, p2);
        Vertex p0 = parent_of(dm, p1);
        h.push_back(p1);
        h.push_back(p2);
        h.push_back(target);
        std::sort(h.begin(), h.end());
        dm = multi_source_bfs(g, h);
        result.trace.steps.push_back({t, target, {p0, p1, p2, target},
                                      static_cast<int>(h.size()), within_one(dm)});
        ++t;
    }
    result.witness = {h, 2};
    return result;
}

/// True iff the set induces a connected subgraph and every vertex of g is
/// within `hops` of it.
inline bool verify_hop_domination(const Graph& g, const HopDomWitness& w) {
    if (w.vertices.empty()) throw std::invalid_argument("empty witness set");
    if (w.hops < 0) throw std::invalid_argument("negative hop count");
    for (Vertex v : w.vertices) g.check_vertex(v);
    InducedSubgraph sub = induced_subgraph(g, w.vertices);
    if (!is_connected(sub.graph)) return false;
    DistanceMap dm = multi_source_bfs(g, sub.to_orig);
    for (int d : dm.dist)
        if (d == DistanceMap::kUnreachable || d > w.hops) return false;
    return true;
}

/// All vertices of degree >= 2. In a connected graph on 3+ vertices this is
/// a connected dominating set: leaves only hang off it.
inline HopDomWitness nonleaf_cds(const Graph& g) {
    if (g.vertex_count() <= 2) throw std::invalid_argument("graph too small for non-leaf CDS");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    std::vector<Vertex> set;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) set.push_back(v);
    return {set, 1};
}

/// Spanning-tree pruning heuristic: BFS tree from the maximum-degree root,
/// then repeatedly drop the smallest-index tree leaf whose removal keeps
/// the set dominating (connectivity is free: the shrunken tree still spans
/// the set). Returns the full vertex set for n <= 2.
inline HopDomWitness greedy_cds(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        return {all, 1};
    }

    Vertex root = max_degree_vertex(g);
    std::vector<std::vector<Vertex>> tree_adj(static_cast<size_t>(n));
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<Vertex> queue{root};
        seen[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    tree_adj[u].push_back(w);
                    tree_adj[w].push_back(u);
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<int> tree_degree(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) tree_degree[v] = static_cast<int>(tree_adj[v].size());
    std::vector<char> in_set(static_cast<size_t>(n), 1);
    int set_size = n;

    auto removal_keeps_domination = [&](Vertex v) {
        // only v itself and its non-set neighbors can lose their dominator
        auto has_other_set_neighbor = [&](Vertex u) {
            for (Vertex w : g.neighbors(u))
                if (w != v && in_set[w]) return true;
            return false;
        };
        if (!has_other_set_neighbor(v)) return false;
        for (Vertex u : g.neighbors(v))
            if (!in_set[u] && !has_other_set_neighbor(u)) return false;
        return true;
    };

    bool changed = true;
    while (changed && set_size > 1) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!in_set[v] || tree_degree[v] != 1) continue;
            if (!removal_keeps_domination(v)) continue;
            in_set[v] = 0;
            --set_size;
            for (Vertex w : tree_adj[v])
                if (in_set[w]) --tree_degree[w];
            changed = true;
            break;  // rescan from the smallest index
        }
    }
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v)
        if (in_set[v]) set.push_back(v);
    return {set, 1};
}

/// Burns the induced subgraph on `vertices` (exactly, when small enough)
/// and lifts the schedule back to g.
namespace detail {

struct SubBurn {
    BurningSchedule lifted;
    int h_length = 0;
    bool used_exact = false;
};

inline SubBurn burn_through_subset(const Graph& g, const std::vector<Vertex>& vertices,
                                   int hops, int exact_threshold) {
    InducedSubgraph sub = induced_subgraph(g, vertices);
    BurningSchedule hs;
    bool used_exact = static_cast<int>(vertices.size()) <= exact_threshold;
    if (used_exact) hs = burning_number_exact(sub.graph).second;
    else hs = greedy_burning(sub.graph);
    BurningSchedule lifted = lift_schedule(g, vertices, hs, hops, sub.to_orig);
    return {lifted, hs.length(), used_exact};
}

}  // namespace detail

struct MindegReport {
    Vertex start = 0;
    int h_size = 0;
    int twohop_bound = 0;  // 3*floor(n/(k+1)) - 2, k = min degree
    int h_length = 0;      // burning length of the induced subgraph
    int total_length = 0;  // == h_length + 2
    bool used_exact = false;
    std::optional<BoundsReport> bounds;  // absent only for n == 1
};

/// Pipeline: grow the 2-hop connected dominating set, burn it, lift by 2.
inline std::pair<BurningSchedule, MindegReport> burn_via_mindeg(const Graph& g,
                                                                int exact_threshold) {
    MindegReport report;
    report.start = max_degree_vertex(g);
    TwoHopResult two_hop = connected_two_hop_dominating(g, report.start);
    int n = g.vertex_count();
    int k = min_degree(g);
    report.h_size = static_cast<int>(two_hop.witness.vertices.size());
    report.twohop_bound = 3 * (n / (k + 1)) - 2;
    if (k >= 1 && k < n) report.bounds = reference_bounds(n, k);
    detail::SubBurn burn =
        detail::burn_through_subset(g, two_hop.witness.vertices, 2, exact_threshold);
    report.h_length = burn.h_length;
    report.total_length = burn.lifted.length();
    report.used_exact = burn.used_exact;
    return {burn.lifted, report};
}

struct WeakdegReport {
    bool leaf_branch = false;  // true: burn the non-leaf CDS; false: reduce first
    int leaf_count = 0;
    double epsilon = 0;
    double nondeg2_fraction = 0;   // fraction of vertices with degree != 2
    int cds_size = 0;
    double reference_size = 0;     // (1 - eps/3)n or (1 - eps/12)n, informational
    int h_length = 0;
    int total_length = 0;          // == h_length + 1
    bool used_exact = false;
};

/// Pipeline: pick a connected dominating set (non-leaf set when the graph
/// has at least eps*n/3 leaves, otherwise reduce to the core, cover it
/// greedily and lift the cover back), burn it, lift by 1.
inline std::pair<BurningSchedule, WeakdegReport> burn_via_weakdeg(const Graph& g, double epsilon,
                                                                  int exact_threshold) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("burn_via_weakdeg: need at least 3 vertices");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("burn_via_weakdeg: epsilon must be in (0,1]");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");

    WeakdegReport report;
    report.epsilon = epsilon;
    int nondeg2 = 0;
    for (Vertex v = 0; v < n; ++v) {
        int d = g.degree(v);
        report.leaf_count += (d == 1);
        nondeg2 += (d != 2);
    }
    report.nondeg2_fraction = static_cast<double>(nondeg2) / n;
    report.leaf_branch = 3.0 * report.leaf_count >= epsilon * n;

    std::vector<Vertex> cds;
    if (report.leaf_branch) {
        cds = nonleaf_cds(g).vertices;
        report.reference_size = (1.0 - epsilon / 3.0) * n;
    } else {
        MultiGraph mg = MultiGraph::from_graph(g);
        ReductionResult reduced = reduce_to_core(mg);
        std::vector<Vertex> core_cds;
        if (reduced.core.vertex_count() <= 2) {
            for (Vertex v = 0; v < reduced.core.vertex_count(); ++v) core_cds.push_back(v);
        } else {
            core_cds = greedy_cds(simplify(reduced.core)).vertices;
        }
        cds = lift_cds(reduced.trace, core_cds, mg);
        report.reference_size = (1.0 - epsilon / 12.0) * n;
    }
    if (!verify_hop_domination(g, {cds, 1}))
        throw std::logic_error("internal verification failure: weakdeg CDS");
    report.cds_size = static_cast<int>(cds.size());

    detail::SubBurn burn = detail::burn_through_subset(g, cds, 1, exact_threshold);
    report.h_length = burn.h_length;
    report.total_length = burn.lifted.length();
    report.used_exact = burn.used_exact;
    return {burn.lifted, report};
}

inline std::string growth_trace_csv(const GrowthTrace& trace) {
    std::ostringstream out;
    out << "t,vertex,path,size_after,within_one\n";
    for (const GrowthStep& s : trace.steps) {
        out << s.t << ',' << s.vertex << ',' << s.path[0] << '-' << s.path[1] << '-'
            << s.path[2] << '-' << s.path[3] << ',' << s.size_after << ',' << s.within_one
            << '\n';
    }
    return out.str();
}

}  // namespace gburn
