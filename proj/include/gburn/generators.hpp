#pragma once

// Deterministic graph constructors: the named families plus seeded random
// families for property testing. All randomness flows through the splitmix64
// generator below; the algorithm is pinned in the README so any
// implementation can reproduce a graph from (family, params, seed).

#include <cstdint>
#include <numeric>
#include <set>

#include "gburn/graph.hpp"

namespace gburn {

/// splitmix64 stream. Output for state s: advance s by 0x9E3779B97F4A7C15,
/// then mix with the two shift-multiply rounds from the reference
/// implementation. Bounded draws use unbiased rejection sampling.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Rejects draws below 2^64 mod bound.
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below(0)");
        uint64_t threshold = (0 - bound) % bound;
        uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return x % bound;
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<uint64_t>(bound))); }

    /// Fisher-Yates, swapping index i (from the back) with next_below(i+1).
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    uint64_t state_;
};

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Star with the center at index 0 and the given number of leaves.
inline Graph star(int n_leaves) {
    if (n_leaves < 1) throw std::invalid_argument("star: need at least 1 leaf");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= n_leaves; ++v) edges.emplace_back(0, v);
    return Graph(n_leaves + 1, edges);
}

/// Center at index 0; leg j occupies indices 1+j*leg_len .. (j+1)*leg_len,
/// consecutive along the leg.
inline Graph spider(int legs, int leg_len) {
    if (legs < 1 || leg_len < 1) throw std::invalid_argument("spider: need legs, leg_len >= 1");
    std::vector<Edge> edges;
    for (int j = 0; j < legs; ++j) {
        Vertex first = 1 + j * leg_len;
        edges.emplace_back(0, first);
        for (int i = 1; i < leg_len; ++i) edges.emplace_back(first + i - 1, first + i);
    }
    return Graph(1 + legs * leg_len, edges);
}

/// Cyclic chain of complete-minus-one-edge blocks. Block i occupies
/// vertices [i*q, (i+1)*q) with the edge {i*q, i*q+q-1} removed; the chain
/// links block i's high endpoint to block i+1's low endpoint, wrapping
/// around. Every vertex ends up with degree block_order-1, so block_order
/// = k+1 gives a k-regular family.
inline Graph necklace(int block_order, int blocks) {
    if (block_order < 4) throw std::invalid_argument("necklace: need block_order >= 4");
    if (blocks < 3) throw std::invalid_argument("necklace: need blocks >= 3");
    int q = block_order;
    std::vector<Edge> edges;
    for (int b = 0; b < blocks; ++b) {
        Vertex base = b * q;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (!(i == 0 && j == q - 1)) edges.emplace_back(base + i, base + j);
        Vertex high = base + q - 1;
        Vertex next_low = ((b + 1) % blocks) * q;
        edges.emplace_back(std::min(high, next_low), std::max(high, next_low));
    }
    return Graph(blocks * q, edges);
}

/// Pairing model: k stubs per vertex, paired two at a time. A draw that
/// would create a loop or a duplicate edge is re-drawn; if the remaining
/// stubs wedge (or the result is disconnected) the whole pairing restarts.
inline Graph random_regular(int n, int k, uint64_t seed) {
    if (n < 1 || k < 0) throw std::invalid_argument("random_regular: bad parameters");
    if (k >= n) throw std::invalid_argument("random_regular: need k < n");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("random_regular: n*k must be even");
    if (k == 0 && n > 1) throw std::invalid_argument("random_regular: 0-regular is disconnected");

    Rng rng(seed);
    const int kMaxRestarts = 1000;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(static_cast<size_t>(n) * k);
        for (Vertex v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i) stubs.push_back(v);

        std::set<Edge> edge_set;
        bool wedged = false;
        while (!stubs.empty()) {
            // a wedge means every remaining pairing is a loop or duplicate
            uint64_t failures = 0;
            uint64_t budget = 200 + stubs.size() * stubs.size();
            bool placed = false;
            while (failures < budget) {
                size_t a = static_cast<size_t>(rng.next_below(stubs.size()));
                size_t b = static_cast<size_t>(rng.next_below(stubs.size()));
                if (a == b) {
                    ++failures;
                    continue;
                }
                Vertex u = stubs[a], v = stubs[b];
                if (u == v || edge_set.count({std::min(u, v), std::max(u, v)})) {
                    ++failures;
                    continue;
                }
                edge_set.insert({std::min(u, v), std::max(u, v)});
                if (a < b) std::swap(a, b);
                stubs.erase(stubs.begin() + static_cast<long>(a));
                stubs.erase(stubs.begin() + static_cast<long>(b));
                placed = true;
                break;
            }
            if (!placed) {
                wedged = true;
                break;
            }
        }
        if (wedged) continue;
        Graph g(n, {edge_set.begin(), edge_set.end()});
        if (n == 1 || is_connected(g)) return g;
    }
    throw std::runtime_error("random_regular: retry budget exhausted");
}

/// Uniform random tree from a random Pruefer sequence, plus extra distinct
/// non-tree edges.
inline Graph random_connected(int n, int extra_edges, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected: need n >= 1");
    long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges < 0 || extra_edges > max_extra)
        throw std::invalid_argument("random_connected: infeasible extra_edges");

    Rng rng(seed);
    std::set<Edge> edge_set;
    if (n == 2) {
        edge_set.insert({0, 1});
    } else if (n >= 3) {
        std::vector<int> pruefer(static_cast<size_t>(n) - 2);
        for (auto& x : pruefer) x = rng.next_int(n);
        // standard decode: repeatedly join the smallest unused leaf to the
        // next sequence entry
        std::vector<int> remaining_degree(n, 1);
        for (int x : pruefer) ++remaining_degree[x];
        std::set<Vertex> leaves;
        for (Vertex v = 0; v < n; ++v)
            if (remaining_degree[v] == 1) leaves.insert(v);
        for (int x : pruefer) {
            Vertex leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edge_set.insert({std::min(leaf, x), std::max(leaf, x)});
            if (--remaining_degree[x] == 1) leaves.insert(x);
        }
        Vertex a = *leaves.begin();
        Vertex b = *std::next(leaves.begin());
        edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    int added = 0;
    while (added < extra_edges) {
        Vertex u = rng.next_int(n);
        Vertex v = rng.next_int(n);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (edge_set.insert(e).second) ++added;
    }
    return Graph(n, {edge_set.begin(), edge_set.end()});
}

}  // namespace gburn
