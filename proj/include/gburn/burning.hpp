#pragma once

// Burning-number machinery. A schedule is an ordered center list v_1..v_L;
// the center at position i (1-indexed) carries radius L-i, so the radii are
// exactly {0,...,L-1}. A schedule is valid when the balls around the centers
// cover the whole vertex set. The burning number b(G) is the smallest L
// admitting a valid schedule.
//
// Centers are pairwise distinct whenever L <= n (a duplicate ball of smaller
// radius is redundant and can be re-centered on any unused vertex); schedules
// longer than n may repeat centers and are accepted by the verifier only.

#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>

#include "gburn/graph.hpp"

namespace gburn {

struct BurningSchedule {
    std::vector<Vertex> centers;  // v_1..v_L; position i has radius L-i

    int length() const { return static_cast<int>(centers.size()); }
};

namespace detail {

class Bits {
public:
    explicit Bits(int n) : n_(n), words_(static_cast<size_t>((n + 63) / 64), 0) {}

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool full() const { return count() == n_; }

    void operator|=(const Bits& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

private:
    int n_;
    std::vector<uint64_t> words_;
};

// Truncated BFS with stamped scratch space, for repeated ball scans on the
// same graph without reallocation.
class BallScanner {
public:
    explicit BallScanner(const Graph& g)
        : g_(g), stamp_(static_cast<size_t>(g.vertex_count()), 0),
          dist_(static_cast<size_t>(g.vertex_count()), 0) {}

    template <typename F>
    void scan(Vertex center, int radius, F&& visit) {
        ++generation_;
        queue_.clear();
        queue_.push_back(center);
        stamp_[center] = generation_;
        dist_[center] = 0;
        for (size_t head = 0; head < queue_.size(); ++head) {
            Vertex u = queue_[head];
            visit(u);
            if (dist_[u] == radius) continue;
            for (Vertex w : g_.neighbors(u)) {
                if (stamp_[w] != generation_) {
                    stamp_[w] = generation_;
                    dist_[w] = dist_[u] + 1;
                    queue_.push_back(w);
                }
            }
        }
    }

private:
    const Graph& g_;
    std::vector<int> stamp_;
    std::vector<int> dist_;
    std::vector<Vertex> queue_;
    int generation_ = 0;
};

}  // namespace detail

/// True iff the balls of the schedule cover every vertex. Out-of-range
/// centers are an error; a schedule that merely fails to cover (or that
/// repeats centers while L <= n) is just invalid.
inline bool verify_schedule(const Graph& g, const BurningSchedule& s) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    for (Vertex c : s.centers) g.check_vertex(c);
    if (s.centers.empty()) return false;
    int L = s.length();
    if (L <= g.vertex_count()) {
        std::vector<Vertex> sorted = s.centers;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    detail::Bits covered(g.vertex_count());
    detail::BallScanner scanner(g);
    for (int i = 0; i < L; ++i)
        scanner.scan(s.centers[i], L - 1 - i, [&](Vertex v) { covered.set(v); });
    return covered.full();
}

/// Smallest L whose best-case coverage (sum of the largest ball of each
/// radius 0..L-1) reaches n. Admissible start for the exact search.
inline int coverage_lower_bound(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    int n = g.vertex_count();
    // max |ball(v,r)| per radius, from one BFS per vertex
    std::vector<long long> max_ball;
    int radius_min = INT_MAX;  // once r reaches the graph radius, balls hit n
    std::vector<int> counts;
    for (Vertex v = 0; v < n; ++v) {
        DistanceMap dm = multi_source_bfs(g, {v});
        int ecc = 0;
        for (int d : dm.dist) ecc = std::max(ecc, d);
        radius_min = std::min(radius_min, ecc);
        counts.assign(static_cast<size_t>(ecc) + 1, 0);
        for (int d : dm.dist) ++counts[d];
        if (max_ball.size() < counts.size()) max_ball.resize(counts.size(), 0);
        long long acc = 0;
        for (size_t r = 0; r < counts.size(); ++r) {
            acc += counts[r];
            max_ball[r] = std::max(max_ball[r], acc);
        }
    }
    long long sum = 0;
    for (int L = 1;; ++L) {
        int r = L - 1;
        sum += (r >= radius_min) ? n : max_ball[r];
        if (sum >= n) return L;
    }
}

/// Literal enumeration of the definition: try every ordered tuple of
/// distinct centers of each length in increasing order. Returns the first
/// (lexicographically smallest) valid schedule of the smallest length.
inline std::pair<int, BurningSchedule> burning_number_oracle(const Graph& g, int max_L) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    if (max_L < 1) throw std::invalid_argument("max_L must be >= 1");
    int n = g.vertex_count();

    // ball bitsets per (radius, vertex), radii up to max_L-1
    int max_r = std::min(max_L - 1, n - 1);
    std::vector<std::vector<detail::Bits>> balls(
        static_cast<size_t>(max_r) + 1, std::vector<detail::Bits>());
    for (int r = 0; r <= max_r; ++r)
        balls[r].assign(static_cast<size_t>(n), detail::Bits(n));
    for (Vertex v = 0; v < n; ++v) {
        DistanceMap dm = multi_source_bfs(g, {v});
        for (Vertex u = 0; u < n; ++u)
            for (int r = dm.dist[u]; r <= max_r; ++r) balls[r][v].set(u);
    }

    std::vector<Vertex> tuple;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int L = 1; L <= max_L; ++L) {
        if (L > n) break;  // a cover of length n always exists, see below
        std::function<bool(int, const detail::Bits&)> enumerate =
            [&](int pos, const detail::Bits& covered) -> bool {
            if (pos == L) return covered.full();
            int radius = L - 1 - pos;
            for (Vertex c = 0; c < n; ++c) {
                if (used[c]) continue;
                used[c] = 1;
                tuple.push_back(c);
                detail::Bits next = covered;
                next |= balls[radius][c];
                if (enumerate(pos + 1, next)) return true;
                tuple.pop_back();
                used[c] = 0;
            }
            return false;
        };
        detail::Bits covered(n);
        if (enumerate(0, covered)) return {L, BurningSchedule{tuple}};
    }
    throw std::runtime_error("no schedule within limit");
}

namespace detail {

// Complete backtracking search for one target length: repeatedly pick the
// uncovered vertex farthest from the placed centers and branch over every
// (unused radius, center) pair that can cover it. Pruning is admissible
// only: a node dies when even the largest remaining balls cannot cover the
// remaining vertices.
class ExactBurner {
public:
    explicit ExactBurner(const Graph& g) : g_(g), n_(g.vertex_count()) {
        dist_.resize(static_cast<size_t>(n_) * n_);
        for (Vertex v = 0; v < n_; ++v) {
            DistanceMap dm = multi_source_bfs(g, {v});
            for (Vertex u = 0; u < n_; ++u) {
                int d = dm.dist[u];
                dist_[static_cast<size_t>(v) * n_ + u] = d == DistanceMap::kUnreachable ? INT_MAX : d;
            }
        }
        max_ball_.assign(static_cast<size_t>(n_), 0);
        std::vector<int> counts;
        for (Vertex v = 0; v < n_; ++v) {
            counts.assign(static_cast<size_t>(n_), 0);
            for (Vertex u = 0; u < n_; ++u) ++counts[dist(v, u)];
            int acc = 0;
            for (int r = 0; r < n_; ++r) {
                acc += counts[r];
                max_ball_[r] = std::max(max_ball_[r], acc);
            }
        }
    }

    std::optional<BurningSchedule> solve(int L) {
        L_ = L;
        used_radius_.assign(static_cast<size_t>(L), 0);
        used_center_.assign(static_cast<size_t>(n_), 0);
        center_of_radius_.assign(static_cast<size_t>(L), -1);
        Bits covered(n_);
        std::vector<int> dist_to_centers(static_cast<size_t>(n_), INT_MAX);
        if (!dfs(covered, n_, dist_to_centers)) return std::nullopt;
        // radii left unassigned when coverage completed early: center them
        // on the smallest unused vertices
        for (int r = L_ - 1; r >= 0; --r) {
            if (center_of_radius_[r] != -1) continue;
            for (Vertex c = 0; c < n_; ++c) {
                if (!used_center_[c]) {
                    used_center_[c] = 1;
                    center_of_radius_[r] = c;
                    break;
                }
            }
        }
        BurningSchedule s;
        for (int r = L_ - 1; r >= 0; --r) s.centers.push_back(center_of_radius_[r]);
        return s;
    }

private:
    int dist(Vertex a, Vertex b) const { return dist_[static_cast<size_t>(a) * n_ + b]; }

    bool dfs(Bits& covered, int uncovered, const std::vector<int>& dist_to_centers) {
        if (uncovered == 0) return true;
        long long best_possible = 0;
        for (int r = 0; r < L_; ++r)
            if (!used_radius_[r]) best_possible += max_ball_[std::min(r, n_ - 1)];
        if (best_possible < uncovered) return false;

        // hardest-to-cover vertex first
        Vertex target = -1;
        int target_dist = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (covered.test(v)) continue;
            if (dist_to_centers[v] > target_dist) {
                target_dist = dist_to_centers[v];
                target = v;
            }
        }

        for (int r = L_ - 1; r >= 0; --r) {
            if (used_radius_[r]) continue;
            for (Vertex c = 0; c < n_; ++c) {
                if (used_center_[c] || dist(c, target) > r) continue;
                used_radius_[r] = 1;
                used_center_[c] = 1;
                center_of_radius_[r] = c;
                newly_covered_.clear();
                for (Vertex v = 0; v < n_; ++v) {
                    if (!covered.test(v) && dist(c, v) <= r) {
                        covered.set(v);
                        newly_covered_.push_back(v);
                    }
                }
                std::vector<int> child_dist(dist_to_centers);
                for (Vertex v = 0; v < n_; ++v)
                    child_dist[v] = std::min(child_dist[v], dist(c, v));
                int gained = static_cast<int>(newly_covered_.size());
                std::vector<Vertex> undo = newly_covered_;
                if (dfs(covered, uncovered - gained, child_dist)) return true;
                for (Vertex v : undo) covered.reset(v);
                used_radius_[r] = 0;
                used_center_[c] = 0;
                center_of_radius_[r] = -1;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int L_ = 0;
    std::vector<int> dist_;
    std::vector<int> max_ball_;
    std::vector<char> used_radius_;
    std::vector<char> used_center_;
    std::vector<Vertex> center_of_radius_;
    std::vector<Vertex> newly_covered_;
};

}  // namespace detail

/// Exact burning number with a valid witness. Iterative deepening from
/// coverage_lower_bound; deterministic (largest radius first, smallest
/// center index first).
inline std::pair<int, BurningSchedule> burning_number_exact(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    detail::ExactBurner burner(g);
    for (int L = coverage_lower_bound(g);; ++L) {
        if (auto s = burner.solve(L)) {
            if (!verify_schedule(g, *s))
                throw std::logic_error("internal verification failure: exact solver");
            return {L, *s};
        }
    }
}

/// Max-coverage greedy: for each candidate length L (from the coverage
/// lower bound up), hand out radii L-1,...,0, each time to the unused
/// center covering the most still-uncovered vertices (ties: smallest
/// index). First L that covers everything wins. Always succeeds by L = n.
inline BurningSchedule greedy_burning(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    int n = g.vertex_count();
    detail::BallScanner scanner(g);
    for (int L = coverage_lower_bound(g); L <= n; ++L) {
        detail::Bits covered(n);
        std::vector<char> used(static_cast<size_t>(n), 0);
        BurningSchedule s;
        int covered_count = 0;
        for (int r = L - 1; r >= 0; --r) {
            Vertex best = -1;
            int best_gain = -1;
            for (Vertex c = 0; c < n; ++c) {
                if (used[c]) continue;
                int gain = 0;
                scanner.scan(c, r, [&](Vertex v) { gain += !covered.test(v); });
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            used[best] = 1;
            s.centers.push_back(best);
            scanner.scan(best, r, [&](Vertex v) {
                if (!covered.test(v)) {
                    covered.set(v);
                    ++covered_count;
                }
            });
        }
        if (covered_count == n) {
            if (!verify_schedule(g, s))
                throw std::logic_error("internal verification failure: greedy burning");
            return s;
        }
    }
    throw std::logic_error("greedy burning failed at L = n");  // unreachable
}

/// Turns a valid schedule for the induced subgraph on h_vertices into a
/// valid schedule for g that is longer by `hops`: the original centers keep
/// their order (each radius grows by hops) and the tail is filled with
/// centers chosen greedily over still-uncovered vertices (which the
/// precondition makes moot: once every vertex is within `hops` of
/// h_vertices, the grown balls already cover g).
inline BurningSchedule lift_schedule(const Graph& g, const std::vector<Vertex>& h_vertices,
                                     const BurningSchedule& h_schedule, int hops,
                                     const std::vector<Vertex>& relabel) {
    if (hops < 0) throw std::invalid_argument("lift_schedule: negative hops");
    InducedSubgraph sub = induced_subgraph(g, h_vertices);
    if (relabel != sub.to_orig)
        throw std::invalid_argument(
            "lift_schedule: relabel map does not match the induced subgraph (expected the "
            "sorted-vertex relabeling)");
    if (!verify_schedule(sub.graph, h_schedule))
        throw std::invalid_argument("lift_schedule: schedule is not valid for the subgraph");
    DistanceMap dm = multi_source_bfs(g, sub.to_orig);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (dm.dist[v] == DistanceMap::kUnreachable || dm.dist[v] > hops)
            throw std::invalid_argument("lift_schedule: vertex " + std::to_string(v) +
                                        " is farther than " + std::to_string(hops) +
                                        " hops from the subgraph");
    }

    int n = g.vertex_count();
    BurningSchedule lifted;
    for (Vertex c : h_schedule.centers) lifted.centers.push_back(relabel[c]);
    int L = h_schedule.length() + hops;

    detail::Bits covered(n);
    detail::BallScanner scanner(g);
    for (int i = 0; i < h_schedule.length(); ++i)
        scanner.scan(lifted.centers[i], L - 1 - i, [&](Vertex v) { covered.set(v); });

    std::vector<char> used(static_cast<size_t>(n), 0);
    for (Vertex c : lifted.centers)
        if (c >= 0 && c < n) used[c] = 1;
    for (int pos = h_schedule.length(); pos < L; ++pos) {
        int radius = L - 1 - pos;
        Vertex best = -1;
        int best_gain = -1;
        bool any_unused = std::find(used.begin(), used.end(), 0) != used.end();
        for (Vertex c = 0; c < n; ++c) {
            if (any_unused && used[c]) continue;
            int gain = 0;
            scanner.scan(c, radius, [&](Vertex v) { gain += !covered.test(v); });
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        used[best] = 1;
        lifted.centers.push_back(best);
        scanner.scan(best, radius, [&](Vertex v) { covered.set(v); });
    }
    if (!verify_schedule(g, lifted))
        throw std::logic_error("internal verification failure: lift_schedule");
    return lifted;
}

/// Closed-form reference values for a graph with n vertices and minimum
/// degree k. mindeg_ref is the square-root reference value only, never a
/// guaranteed bound.
struct BoundsReport {
    int n = 0;
    int k_min = 0;
    int sqrt_ceil = 0;      // smallest s with s*s >= n
    int twohop_bound = 0;   // 3*floor(n/(k+1)) - 2
    int mindeg_ref = 0;     // smallest s with s*s*(k+1) >= 3n
    int general_upper = 0;  // 2*sqrt_ceil + 1
};

inline int isqrt_ceil(long long x) {
    if (x <= 0) return 0;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (s * s < x) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= x) --s;
    return static_cast<int>(s);
}

inline BoundsReport reference_bounds(int n, int k) {
    if (n < 1) throw std::invalid_argument("reference_bounds: need n >= 1");
    if (k < 1 || k >= n) throw std::invalid_argument("reference_bounds: need 1 <= k < n");
    BoundsReport r;
    r.n = n;
    r.k_min = k;
    r.sqrt_ceil = isqrt_ceil(n);
    r.twohop_bound = 3 * (n / (k + 1)) - 2;
    long long s = static_cast<long long>(std::sqrt(3.0 * n / (k + 1)));
    while (s * s * (k + 1) < 3LL * n) ++s;
    while (s > 0 && (s - 1) * (s - 1) * (k + 1) >= 3LL * n) --s;
    r.mindeg_ref = static_cast<int>(s);
    r.general_upper = 2 * r.sqrt_ceil + 1;
    return r;
}

}  // namespace gburn
