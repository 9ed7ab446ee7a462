#pragma once

// Degree-1 / degree-2 reduction engine over a multigraph, with a replayable
// undo log and connected-dominating-set lifting.
//
// Reductions run on multigraph semantics deliberately: smoothing a degree-2
// vertex re-attaches both of its edges, so the neighbors keep their degrees
// even when they were already adjacent (parallel edge) or coincide (loop).
// Under simple-graph semantics the same step can drop neighbor degrees and
// decrease the graph value; see the reduction tests for the counterexample.

#include <map>
#include <tuple>

#include "gburn/graph.hpp"

namespace gburn {

/// Undirected multigraph. Loops are allowed and contribute 2 to the degree
/// of their endpoint.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    MultiGraph(int n, const std::vector<Edge>& edges) : MultiGraph(n) {
        for (const auto& [u, v] : edges) add_edge(u, v);
    }

    static MultiGraph from_graph(const Graph& g) {
        MultiGraph m(g.vertex_count());
        for (const auto& [u, v] : g.edges()) m.add_edge(u, v);
        return m;
    }

    int vertex_count() const { return n_; }

    /// Sum of edge multiplicities, each loop counted once.
    long long edge_total() const { return edge_total_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        ++adj_[u][v];
        if (u != v) ++adj_[v][u];
        ++edge_total_;
    }

    /// Removes one instance of the edge {u,v}; throws if absent.
    void remove_one_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        auto it = adj_[u].find(v);
        if (it == adj_[u].end()) throw std::invalid_argument("edge not present");
        if (--it->second == 0) adj_[u].erase(it);
        if (u != v) {
            auto jt = adj_[v].find(u);
            if (--jt->second == 0) adj_[v].erase(jt);
        }
        --edge_total_;
    }

    int degree(Vertex v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& [w, mult] : adj_[v]) d += (w == v) ? 2 * mult : mult;
        return d;
    }

    /// Neighbor -> multiplicity map; a loop appears under the vertex itself.
    const std::map<Vertex, int>& incident(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    /// Canonical edge multiset: sorted (u, v, multiplicity) with u <= v.
    std::vector<std::tuple<Vertex, Vertex, int>> edge_multiset() const {
        std::vector<std::tuple<Vertex, Vertex, int>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (const auto& [v, mult] : adj_[u])
                if (u <= v) out.emplace_back(u, v, mult);
        return out;
    }

    bool operator==(const MultiGraph& o) const {
        return n_ == o.n_ && edge_multiset() == o.edge_multiset();
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

private:
    int n_ = 0;
    long long edge_total_ = 0;
    std::vector<std::map<Vertex, int>> adj_;
};

inline bool is_connected(const MultiGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const auto& [w, mult] : g.incident(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

/// Drops loops and collapses parallel edges.
inline Graph simplify(const MultiGraph& m) {
    std::vector<Edge> edges;
    for (const auto& [u, v, mult] : m.edge_multiset())
        if (u != v) edges.emplace_back(u, v);
    return Graph(m.vertex_count(), edges);
}

/// (#vertices of degree >= 3) - (#vertices of degree 1).
inline int graph_value(const MultiGraph& g) {
    int value = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d >= 3) ++value;
        else if (d == 1) --value;
    }
    return value;
}

struct ReductionStep {
    enum class Kind { Leaf, Smooth };
    Kind kind;
    Vertex v;  // the removed vertex
    Vertex x;  // leaf: its neighbor; smooth: smaller endpoint of the new edge
    Vertex y;  // smooth: larger endpoint (may equal x when the new edge is a loop); -1 for leaf
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<Vertex> core_labels;  // core index -> original vertex label
};

namespace detail {

// Shared reduction loop. Removal keeps original labels alive-flagged; the
// compact core is assembled at the end.
class ReduceEngine {
public:
    explicit ReduceEngine(const MultiGraph& g) : g_(g), alive_(g.vertex_count(), 1) {
        if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
        alive_count_ = g.vertex_count();
    }

    // Applies one reduction step; false when the process has stopped.
    bool step(ReductionStep* record) {
        Vertex v = -1;
        int d = 0;
        for (Vertex u = 0; u < g_.vertex_count(); ++u) {
            if (!alive_[u]) continue;
            int du = g_.degree(u);
            if (du == 1 || du == 2) {
                v = u;
                d = du;
                break;
            }
        }
        if (v == -1) return false;
        if (d == 1) {
            Vertex u = g_.incident(v).begin()->first;
            g_.remove_one_edge(v, u);
            alive_[v] = 0;
            --alive_count_;
            if (record) *record = {ReductionStep::Kind::Leaf, v, u, -1};
            return true;
        }
        if (alive_count_ <= 2) return false;  // smoothing stops at trivial size
        Vertex x = -1, y = -1;
        for (const auto& [w, mult] : g_.incident(v)) {
            if (w == v)
                throw std::logic_error("degree-2 vertex with a loop cannot occur in a "
                                       "connected graph of 3+ vertices");
            for (int i = 0; i < mult; ++i) {
                if (x == -1) x = w;
                else y = w;
            }
        }
        if (x > y) std::swap(x, y);
        g_.remove_one_edge(v, x);
        g_.remove_one_edge(v, y);
        alive_[v] = 0;
        --alive_count_;
        g_.add_edge(x, y);
        if (record) *record = {ReductionStep::Kind::Smooth, v, x, y};
        return true;
    }

    int value() const {
        int value = 0;
        for (Vertex u = 0; u < g_.vertex_count(); ++u) {
            if (!alive_[u]) continue;
            int d = g_.degree(u);
            if (d >= 3) ++value;
            else if (d == 1) --value;
        }
        return value;
    }

    std::vector<Vertex> alive_labels() const {
        std::vector<Vertex> labels;
        for (Vertex u = 0; u < g_.vertex_count(); ++u)
            if (alive_[u]) labels.push_back(u);
        return labels;
    }

    MultiGraph compact_core(const std::vector<Vertex>& labels) const {
        std::vector<Vertex> to_core(static_cast<size_t>(g_.vertex_count()), -1);
        for (size_t i = 0; i < labels.size(); ++i) to_core[labels[i]] = static_cast<Vertex>(i);
        MultiGraph core(static_cast<int>(labels.size()));
        for (Vertex u : labels)
            for (const auto& [w, mult] : g_.incident(u))
                if (u <= w)
                    for (int i = 0; i < mult; ++i) core.add_edge(to_core[u], to_core[w]);
        return core;
    }

private:
    MultiGraph g_;
    std::vector<char> alive_;
    int alive_count_ = 0;
};

}  // namespace detail

struct ReductionResult {
    MultiGraph core;
    ReductionTrace trace;
};

/// Repeatedly removes the smallest-index vertex of degree 1 (delete) or
/// degree 2 (smooth: replace by an edge between its two endpoints, adding a
/// parallel edge or loop when needed) until minimum degree reaches 3.
/// Smoothing is suppressed once only two vertices remain, so cycles stop at
/// a two-vertex multi-edge instead of degenerating; leaf removal still runs
/// at any size, so trees peel down to a single vertex.
inline ReductionResult reduce_to_core(const MultiGraph& g) {
    detail::ReduceEngine engine(g);
    ReductionResult result;
    ReductionStep record;
    while (engine.step(&record)) result.trace.steps.push_back(record);
    result.trace.core_labels = engine.alive_labels();
    result.core = engine.compact_core(result.trace.core_labels);
    return result;
}

/// Runs the reduction while recording the graph value after every step;
/// true iff the sequence (including the initial value) never decreases.
inline bool value_monotone_check(const MultiGraph& g) {
    detail::ReduceEngine engine(g);
    int prev = engine.value();
    while (engine.step(nullptr)) {
        int cur = engine.value();
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

/// Replays a trace forward from `original`, validating every record against
/// the graph state (right vertex degrees, right neighbors). Returns the
/// compact core and checks it matches the trace's core labels.
inline MultiGraph replay_trace(const MultiGraph& original, const ReductionTrace& trace) {
    MultiGraph g = original;
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
    auto fail = [](size_t i, const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("trace step " + std::to_string(i) +
                                     " inconsistent with graph: " + why);
    };
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const ReductionStep& s = trace.steps[i];
        g.check_vertex(s.v);
        if (!alive[s.v]) throw fail(i, "vertex already removed");
        int d = g.degree(s.v);
        if (s.kind == ReductionStep::Kind::Leaf) {
            if (d != 1) throw fail(i, "vertex is not a leaf");
            Vertex u = g.incident(s.v).begin()->first;
            if (u != s.x) throw fail(i, "recorded neighbor mismatch");
            g.remove_one_edge(s.v, u);
        } else {
            if (d != 2) throw fail(i, "vertex does not have degree 2");
            std::vector<Vertex> ends;
            for (const auto& [w, mult] : g.incident(s.v))
                for (int j = 0; j < mult; ++j) ends.push_back(w);
            std::sort(ends.begin(), ends.end());
            if (ends.size() != 2 || ends[0] != s.x || ends[1] != s.y)
                throw fail(i, "recorded endpoints mismatch");
            g.remove_one_edge(s.v, ends[0]);
            g.remove_one_edge(s.v, ends[1]);
            g.add_edge(s.x, s.y);
        }
        alive[s.v] = 0;
    }
    std::vector<Vertex> labels;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (alive[u]) labels.push_back(u);
    if (labels != trace.core_labels)
        throw std::invalid_argument("trace core labels do not match the replayed graph");
    std::vector<Vertex> to_core(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < labels.size(); ++i) to_core[labels[i]] = static_cast<Vertex>(i);
    MultiGraph core(static_cast<int>(labels.size()));
    for (Vertex u : labels)
        for (const auto& [w, mult] : g.incident(u))
            if (u <= w)
                for (int j = 0; j < mult; ++j) core.add_edge(to_core[u], to_core[w]);
    return core;
}

namespace detail {

inline bool is_valid_cds(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::vector<char> in_set(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : set) {
        g.check_vertex(v);
        in_set[v] = 1;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_set[v]) continue;
        bool dominated = false;
        for (Vertex w : g.neighbors(v))
            if (in_set[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    InducedSubgraph sub = induced_subgraph(g, set);
    return is_connected(sub.graph);
}

}  // namespace detail

/// Lifts a connected dominating set of the core back to the original graph
/// by replaying the trace in reverse. Each restored vertex v contributes one
/// vertex to the set: v itself when the set already holds one of v's
/// recorded neighbors, otherwise v's smallest recorded neighbor. core_cds is
/// indexed in core vertices and validated (against the simplified core)
/// before any replay.
inline std::vector<Vertex> lift_cds(const ReductionTrace& trace,
                                    const std::vector<Vertex>& core_cds,
                                    const MultiGraph& original) {
    MultiGraph core = replay_trace(original, trace);
    if (!detail::is_valid_cds(simplify(core), core_cds))
        throw std::invalid_argument(
            "lift_cds: core_cds is not a valid connected dominating set of the core");

    std::vector<char> in_set(static_cast<size_t>(original.vertex_count()), 0);
    for (Vertex c : core_cds) in_set[trace.core_labels[c]] = 1;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        Vertex a = it->x;
        Vertex b = (it->kind == ReductionStep::Kind::Smooth) ? it->y : it->x;
        if (in_set[a] || in_set[b]) in_set[it->v] = 1;
        else in_set[std::min(a, b)] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < original.vertex_count(); ++v)
        if (in_set[v]) out.push_back(v);
    return out;
}

}  // namespace gburn
