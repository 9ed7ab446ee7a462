#include <catch2/catch_amalgamated.hpp>

#include "gburn/burning.hpp"
#include "gburn/generators.hpp"
#include "gburn/witness_json.hpp"
#include "oracles.hpp"

using namespace gburn;

TEST_CASE("verify_schedule basics") {
    CHECK(verify_schedule(path(4), {{1, 3}}));
    CHECK(!verify_schedule(complete(5), {{0}}));
    CHECK(verify_schedule(path(9), {{2, 6, 8}}));
    CHECK_THROWS_AS(verify_schedule(path(4), {{1, 9}}), std::invalid_argument);
    // duplicate centers are invalid while the schedule fits in n...
    CHECK(!verify_schedule(path(4), {{1, 1}}));
    // ...but tolerated for overlong schedules
    CHECK(verify_schedule(complete(2), {{0, 1, 0}}));
    CHECK(!verify_schedule(path(4), {BurningSchedule{}.centers}));
}

TEST_CASE("coverage lower bound") {
    CHECK(coverage_lower_bound(path(9)) == 3);
    CHECK(coverage_lower_bound(complete(6)) == 2);
    CHECK(coverage_lower_bound(cycle(16)) == 4);
    CHECK(coverage_lower_bound(complete(1)) == 1);
}

TEST_CASE("definitional oracle") {
    auto [l1, w1] = burning_number_oracle(complete(1), 1);
    CHECK(l1 == 1);
    CHECK(w1.centers == std::vector<Vertex>{0});

    auto [l2, w2] = burning_number_oracle(complete(6), 6);
    CHECK(l2 == 2);
    CHECK(verify_schedule(complete(6), w2));

    CHECK(burning_number_oracle(path(9), 9).first == 3);

    CHECK_THROWS_AS(burning_number_oracle(Graph(4, {{0, 1}, {2, 3}}), 4), std::invalid_argument);
    CHECK_THROWS_WITH(burning_number_oracle(path(9), 2),
                      Catch::Matchers::ContainsSubstring("no schedule within limit"));
}

TEST_CASE("exact solver on named graphs") {
    CHECK(burning_number_exact(path(16)).first == 4);
    CHECK(burning_number_exact(star(9)).first == 2);

    auto [c16, w] = burning_number_exact(cycle(16));
    CHECK(c16 == 4);
    CHECK(c16 == burning_number_oracle(cycle(16), 4).first);
    CHECK(verify_schedule(cycle(16), w));

    CHECK_THROWS_AS(burning_number_exact(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("exact solver equals ceil(sqrt(n)) on paths up to 25") {
    for (int n = 1; n <= 25; ++n)
        CHECK(burning_number_exact(path(n)).first == isqrt_ceil(n));
}

TEST_CASE("exact solver agrees with the oracle exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n) {
        testoracle::for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            CHECK(burning_number_exact(g).first == burning_number_oracle(g, n).first);
        });
    }
}

TEST_CASE("exact solver agrees with the oracle on random graphs") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 6 + static_cast<int>(seed % 3);
        Graph g = random_connected(n, static_cast<int>(seed % 5), seed);
        auto [exact, w] = burning_number_exact(g);
        CHECK(exact == burning_number_oracle(g, n).first);
        CHECK(verify_schedule(g, w));
    }
}

TEST_CASE("exact witnesses are deterministic") {
    Graph g = random_connected(12, 6, 77);
    auto a = burning_number_exact(g);
    auto b = burning_number_exact(g);
    CHECK(a.first == b.first);
    CHECK(a.second.centers == b.second.centers);
    CHECK(schedule_json(12, a.second, true) == schedule_json(12, b.second, true));
}

TEST_CASE("greedy burning") {
    CHECK(greedy_burning(complete(6)).length() == 2);
    CHECK(greedy_burning(path(9)).length() == 3);
    CHECK(greedy_burning(path(2)).length() == 2);
    CHECK_THROWS_AS(greedy_burning(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("lower bound <= exact <= greedy") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected(9, static_cast<int>(seed % 7), seed * 13);
        BurningSchedule greedy = greedy_burning(g);
        CHECK(verify_schedule(g, greedy));
        int exact = burning_number_exact(g).first;
        CHECK(coverage_lower_bound(g) <= exact);
        CHECK(exact <= greedy.length());
    }
}

TEST_CASE("lift_schedule") {
    SECTION("single ball grown by the hop count covers K6") {
        BurningSchedule lifted = lift_schedule(complete(6), {0}, {{0}}, 2, {0});
        CHECK(lifted.length() == 3);
        CHECK(verify_schedule(complete(6), lifted));
    }
    SECTION("middle of P9 lifts a P5 schedule") {
        Graph p9 = path(9);
        std::vector<Vertex> h{2, 3, 4, 5, 6};
        InducedSubgraph sub = induced_subgraph(p9, h);
        auto [len, hs] = burning_number_exact(sub.graph);
        CHECK(len == 3);
        BurningSchedule lifted = lift_schedule(p9, h, hs, 2, sub.to_orig);
        CHECK(lifted.length() == 5);
        CHECK(verify_schedule(p9, lifted));
    }
    SECTION("identity lift") {
        Graph g = random_connected(10, 4, 5);
        std::vector<Vertex> all(10);
        std::iota(all.begin(), all.end(), 0);
        auto [len, hs] = burning_number_exact(g);
        BurningSchedule lifted = lift_schedule(g, all, hs, 0, all);
        CHECK(lifted.centers == hs.centers);
    }
    SECTION("length always grows by exactly hops") {
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Graph g = random_connected(20, 6, seed);
            DistanceMap dm = multi_source_bfs(g, {0});
            int ecc = *std::max_element(dm.dist.begin(), dm.dist.end());
            auto [len, hs] = burning_number_exact(Graph(1, {}));
            BurningSchedule lifted = lift_schedule(g, {0}, hs, ecc, {0});
            CHECK(lifted.length() == hs.length() + ecc);
            CHECK(verify_schedule(g, lifted));
        }
    }
    SECTION("precondition violations are reported") {
        Graph p9 = path(9);
        // vertex 8 is 6 hops from {0,1,2}
        InducedSubgraph sub = induced_subgraph(p9, {0, 1, 2});
        auto [len, hs] = burning_number_exact(sub.graph);
        CHECK_THROWS_WITH(lift_schedule(p9, {0, 1, 2}, hs, 2, sub.to_orig),
                          Catch::Matchers::ContainsSubstring("vertex 5"));
        // invalid subgraph schedule
        CHECK_THROWS_WITH(lift_schedule(p9, {0, 1, 2}, {{0, 1, 2, 0}}, 6, sub.to_orig),
                          Catch::Matchers::ContainsSubstring("not valid"));
        // wrong relabel map
        CHECK_THROWS_WITH(lift_schedule(p9, {0, 1, 2}, hs, 6, {2, 1, 0}),
                          Catch::Matchers::ContainsSubstring("relabel"));
    }
}

TEST_CASE("reference bounds") {
    BoundsReport b = reference_bounds(9, 1);
    CHECK(b.sqrt_ceil == 3);
    CHECK(b.twohop_bound == 10);
    CHECK(b.general_upper == 7);

    CHECK(reference_bounds(6, 5).twohop_bound == 1);

    BoundsReport c = reference_bounds(100, 2);
    CHECK(c.mindeg_ref == 10);
    CHECK(c.sqrt_ceil == 10);

    CHECK(reference_bounds(2000, 8).mindeg_ref == 26);

    CHECK_THROWS_AS(reference_bounds(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(reference_bounds(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(reference_bounds(0, 1), std::invalid_argument);
}

TEST_CASE("schedule json shape") {
    CHECK(schedule_json(9, {{2, 6, 8}}, true) ==
          R"({"n":9,"length":3,"centers":[2,6,8],"valid":true})");
    BurningSchedule parsed = parse_schedule_json(R"({"n":9,"length":3,"centers":[2,6,8],"valid":true})");
    CHECK(parsed.centers == std::vector<Vertex>{2, 6, 8});
    CHECK_THROWS(parse_schedule_json("{"));
    CHECK_THROWS(parse_schedule_json(R"({"centers":"nope"})"));
    CHECK_THROWS(parse_schedule_json(R"({"length":2,"centers":[1]})"));
}
