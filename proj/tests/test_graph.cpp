#include <catch2/catch_amalgamated.hpp>

#include "gburn/edgelist.hpp"
#include "gburn/generators.hpp"
#include "gburn/graph.hpp"
#include "oracles.hpp"

using namespace gburn;

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);

    Graph g(4, {{0, 1}, {2, 3}, {1, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
}

TEST_CASE("degree sum equals twice the edge count") {
    for (uint64_t seed : {1u, 2u, 3u, 4u}) {
        Graph g = random_connected(40, 25, seed);
        int sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("min_degree on named graphs") {
    CHECK(min_degree(path(5)) == 1);
    CHECK(min_degree(complete(6)) == 5);
    CHECK(min_degree(cycle(7)) == 2);
    CHECK_THROWS_AS(min_degree(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("multi_source_bfs on paths") {
    Graph p5 = path(5);
    CHECK(multi_source_bfs(p5, {0}).dist == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(multi_source_bfs(p5, {0, 4}).dist == std::vector<int>{0, 1, 2, 1, 0});

    Graph disconnected(2, {});
    DistanceMap dm = multi_source_bfs(disconnected, {0});
    CHECK(dm.dist[1] == DistanceMap::kUnreachable);
    CHECK(!dm.reachable(1));

    CHECK_THROWS_AS(multi_source_bfs(p5, {}), std::invalid_argument);
    CHECK_THROWS_AS(multi_source_bfs(p5, {7}), std::invalid_argument);
}

TEST_CASE("bfs matches the relaxation oracle on random graphs") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_connected(50, static_cast<int>(seed * 3), seed);
        std::vector<Vertex> sources{0, static_cast<Vertex>(seed % 50)};
        DistanceMap dm = multi_source_bfs(g, sources);
        CHECK(dm.dist == testoracle::naive_distances(g, sources));
    }
    // disconnected case
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(multi_source_bfs(g, {0}).dist == testoracle::naive_distances(g, {0}));
}

TEST_CASE("bfs edge condition holds") {
    Graph g = random_connected(30, 12, 9);
    DistanceMap dm = multi_source_bfs(g, {3, 17});
    for (const auto& [u, v] : g.edges())
        CHECK(std::abs(dm.dist[u] - dm.dist[v]) <= 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        CHECK((dm.dist[v] == 0) == (v == 3 || v == 17));
}

TEST_CASE("ball examples") {
    CHECK(ball(path(5), 2, 1) == std::vector<Vertex>{1, 2, 3});
    CHECK(ball(cycle(6), 0, 2) == std::vector<Vertex>{0, 1, 2, 4, 5});
    Graph g = random_connected(20, 8, 5);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        CHECK(ball(g, v, 0) == std::vector<Vertex>{v});
    CHECK_THROWS_AS(ball(g, 25, 1), std::invalid_argument);
}

TEST_CASE("ball agrees with distances") {
    Graph g = random_connected(40, 30, 11);
    for (Vertex v : {0, 7, 22}) {
        DistanceMap dm = multi_source_bfs(g, {v});
        for (int r = 0; r <= 5; ++r) {
            std::vector<Vertex> expect;
            for (Vertex u = 0; u < g.vertex_count(); ++u)
                if (dm.dist[u] != DistanceMap::kUnreachable && dm.dist[u] <= r)
                    expect.push_back(u);
            CHECK(ball(g, v, r) == expect);
        }
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(path(5)));
    CHECK(is_connected(complete(1)));
    CHECK(!is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK_THROWS_AS(is_connected(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("induced subgraphs") {
    InducedSubgraph sub = induced_subgraph(path(5), {1, 2, 3});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(sub.to_orig == std::vector<Vertex>{1, 2, 3});
    CHECK(sub.to_sub == std::vector<Vertex>{-1, 0, 1, 2, -1});

    CHECK(induced_subgraph(complete(4), {0, 1}).graph.edge_count() == 1);
    CHECK(induced_subgraph(cycle(6), {0, 2, 4}).graph.edge_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(path(5), {}), std::invalid_argument);
}

TEST_CASE("induced subgraph relabels back to the original edges") {
    Graph g = random_connected(30, 20, 13);
    std::vector<Vertex> s{0, 2, 3, 5, 8, 13, 21, 27};
    InducedSubgraph sub = induced_subgraph(g, s);
    std::vector<Edge> mapped_back;
    for (const auto& [u, v] : sub.graph.edges()) {
        Vertex a = sub.to_orig[u], b = sub.to_orig[v];
        mapped_back.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped_back.begin(), mapped_back.end());
    std::vector<Edge> expect;
    std::set<Vertex> in_s(s.begin(), s.end());
    for (const auto& [u, v] : g.edges())
        if (in_s.count(u) && in_s.count(v)) expect.emplace_back(u, v);
    CHECK(mapped_back == expect);
}

TEST_CASE("edge list round trip") {
    Graph g = random_connected(25, 14, 3);
    std::string text = to_edge_list(g);
    std::istringstream in(text);
    Graph back = parse_edge_list(in);
    CHECK(to_edge_list(back) == text);
}

TEST_CASE("edge list parser reports line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    };
    CHECK_THROWS_WITH(parse("2 1\n0 0\n"), Catch::Matchers::ContainsSubstring("line 2") &&
                                               Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(parse("3 2\n0 1\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("line 3") &&
                          Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(parse("3 1\n0 5\n"), Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(parse("3 1\n1 0\n"), Catch::Matchers::ContainsSubstring("u < v"));
    CHECK_THROWS_WITH(parse("nope\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse("3 2\n0 1\n"), Catch::Matchers::ContainsSubstring("expected 2 edges"));
    CHECK_THROWS_WITH(parse("3 1\n0 1\n0 2\n"), Catch::Matchers::ContainsSubstring("trailing"));
}
