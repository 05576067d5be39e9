#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/constructions.hpp"
#include "recolor/graph.hpp"
#include "recolor/patterns.hpp"

#include "oracles.hpp"
#include "testutil.hpp"

using recolor::errc;
using recolor::Graph;
using recolor::ProperColoring;
using testutil::thrown_code;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("matching-minus bipartite construction") {
    auto [g3, c3] = recolor::build_mk(3);
    CHECK(g3.order() == 6);
    CHECK(g3.connected());
    // 2-regular and connected on six vertices: the hexagon.
    CHECK(degree_sequence(g3) == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(recolor::chromatic_number(g3) == 2);
    CHECK(recolor::clique_number(g3) == 2);
    CHECK(g3.label(0) == "a_1");
    CHECK(g3.label(5) == "b_3");
    CHECK(c3.assign == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK_NOTHROW(recolor::validate_coloring(g3, c3));
    CHECK(recolor::is_frozen(g3, c3));

    auto [g4, c4] = recolor::build_mk(4);
    CHECK(g4.order() == 8);
    CHECK(degree_sequence(g4) == std::vector<int>(8, 3));
    CHECK_FALSE(g4.adj(0, 4));  // a_i misses exactly b_i
    CHECK(g4.adj(0, 5));
    CHECK(recolor::is_frozen(g4, c4));
    CHECK(recolor::chromatic_number(g4) == 2);

    auto [g2, c2] = recolor::build_mk(2);
    CHECK(g2.edge_count() == 2);
    CHECK(recolor::is_frozen(g2, c2));

    CHECK(thrown_code([] { recolor::build_mk(1); }) == errc::invalid_k);
}

TEST_CASE("frozen pair construction at (4,5)") {
    auto [g, labels] = recolor::build_gtk(4, 5);
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 32);
    CHECK(labels.pair_sequence ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    CHECK(labels.phi == std::vector<int>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5});
    CHECK(labels.alpha == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 1, 1, 3});
    CHECK(g.label(0) == "u_1(1,1)");
    CHECK(g.label(9) == "u_10(5,3)");

    // Non-adjacency is exactly "phi equal or alpha equal": 13 pairs, 1-based.
    const std::set<std::pair<int, int>> non_edges = {{1, 2}, {1, 8}, {1, 9}, {2, 3}, {3, 4},
                                                     {4, 5}, {4, 10}, {5, 6}, {5, 10}, {6, 7},
                                                     {7, 8}, {8, 9}, {9, 10}};
    for (int u = 1; u <= 10; ++u)
        for (int v = u + 1; v <= 10; ++v)
            CHECK(g.adj(u - 1, v - 1) == !non_edges.count({u, v}));

    CHECK(degree_sequence(g) == std::vector<int>{6, 6, 6, 6, 6, 6, 7, 7, 7, 7});
    std::vector<int> degrees;
    for (int v = 0; v < 10; ++v) degrees.push_back(g.degree(v));
    CHECK(degrees == std::vector<int>{6, 7, 7, 6, 6, 7, 7, 6, 6, 6});
    CHECK(recolor::false_twins(g).empty());

    CHECK(recolor::chromatic_number(g) == 4);
    CHECK(recolor::is_pl_free(g, 5));
    CHECK(recolor::is_frozen(g, ProperColoring{5, labels.phi}));
    CHECK_NOTHROW(recolor::validate_coloring(g, ProperColoring{4, labels.alpha}));
}

TEST_CASE("frozen pair construction invariants across the range") {
    for (int t = 4; t <= 6; ++t)
        for (int k = t + 1; k <= t * (t - 1) / 2; ++k) {
            auto [g, labels] = recolor::build_gtk(t, k);
            REQUIRE(g.order() == 2 * k);
            REQUIRE(static_cast<int>(labels.pair_sequence.size()) == k);

            // The first t pairs walk the cycle on 1..t.
            for (int i = 1; i <= t; ++i)
                CHECK(labels.pair_sequence[i - 1] == std::make_pair(i, i % t + 1));
            // All pairs are distinct 2-subsets of 1..t.
            std::set<std::pair<int, int>> seen;
            for (auto [a, b] : labels.pair_sequence) {
                CHECK(a != b);
                CHECK(1 <= std::min(a, b));
                CHECK(std::max(a, b) <= t);
                CHECK(seen.insert({std::min(a, b), std::max(a, b)}).second);
            }
            // Same phi class never has an edge; the edge rule is exact.
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v)
                    CHECK(g.adj(u, v) ==
                          (labels.phi[u] != labels.phi[v] && labels.alpha[u] != labels.alpha[v]));
        }

    CHECK(thrown_code([] { recolor::build_gtk(3, 4); }) == errc::out_of_range);
    CHECK(thrown_code([] { recolor::build_gtk(4, 4); }) == errc::out_of_range);
    CHECK(thrown_code([] { recolor::build_gtk(4, 7); }) == errc::out_of_range);
    CHECK(thrown_code([] { recolor::build_gtk(5, 5); }) == errc::out_of_range);
}

TEST_CASE("lift walkthrough") {
    auto [base, coloring] = recolor::build_mk(3);
    auto [g, c] = recolor::lift(base, coloring, 1, 6);
    CHECK(g.order() == 8);
    CHECK(c.k == 4);
    CHECK(c.assign == std::vector<int>{1, 2, 3, 1, 2, 3, 4, 4});
    // Each added vertex dominates the closed neighborhood it duplicates.
    CHECK(g.neighbors(6) == std::vector<int>{0, 4, 5});
    CHECK(g.neighbors(7) == std::vector<int>{1, 2, 3});
    CHECK(g.label(6) == "a_1'");
    CHECK(g.label(7) == "b_1'");
    CHECK(recolor::is_frozen(g, c));
    CHECK(recolor::chromatic_number(g) == 3);
    CHECK(recolor::clique_number(g) == 3);
    CHECK(recolor::is_pl_free(g, 6));

    auto [g2, c2] = recolor::lift(base, coloring, 2, 6);
    CHECK(c2.k == 5);
    CHECK(recolor::is_frozen(g2, c2));
    CHECK(recolor::chromatic_number(g2) == 4);
    CHECK(recolor::clique_number(g2) == 4);
    CHECK(recolor::is_pl_free(g2, 6));
}

TEST_CASE("lift rejects unsuitable bases") {
    auto [base, coloring] = recolor::build_mk(3);
    CHECK(thrown_code([&] { recolor::lift(base, coloring, 0, 6); }) == errc::out_of_range);
    CHECK(thrown_code([&] {
        recolor::lift(base, {3, {1, 1, 3, 1, 2, 3}}, 1, 6);
    }) == errc::improper_coloring);
    // Proper but nothing uses color 4, so no closed neighborhood sees it.
    CHECK(thrown_code([&] {
        recolor::lift(base, {4, {1, 2, 3, 1, 2, 3}}, 1, 6);
    }) == errc::not_frozen);
    // The pentagon has chi = 3 > omega = 2.
    const Graph c5 = recolor::cycle_pattern(5).target;
    CHECK(thrown_code([&] {
        recolor::lift(c5, {3, {1, 2, 1, 2, 3}}, 1, 6);
    }) == errc::chi_omega_mismatch);
    // Valid frozen base, but it contains an induced P3.
    CHECK(thrown_code([&] { recolor::lift(base, coloring, 1, 3); }) == errc::not_pl_free);
}

TEST_CASE("pentagon expansion witnesses") {
    auto [adjacent, nonadjacent] = recolor::k3c5_witnesses();
    CHECK(adjacent.order() == 7);
    CHECK(nonadjacent.order() == 7);
    CHECK(adjacent.connected());
    CHECK(nonadjacent.connected());
    CHECK(recolor::clique_number(adjacent) == 4);
    CHECK(recolor::clique_number(nonadjacent) == 3);
    CHECK(recolor::chromatic_number(adjacent) == 4);
    CHECK(recolor::chromatic_number(nonadjacent) == 4);
    CHECK(recolor::is_pl_free(adjacent, 5));
    CHECK(recolor::is_pl_free(nonadjacent, 5));
}

TEST_CASE("catalog basics") {
    const int orders[] = {5, 6, 7, 7, 8, 8, 8, 8, 9, 9};
    for (int i = 1; i <= 10; ++i) {
        const Graph g = recolor::catalog(i);
        CHECK(g.order() == orders[i - 1]);
        CHECK(g.connected());
        CHECK(g.label(0) == "x_1");
        CHECK(g.label(g.order() - 1) == "x_" + std::to_string(g.order()));
        CHECK(recolor::chromatic_number(g) == 3);
        CHECK(recolor::clique_number(g) == (i == 1 ? 2 : 3));
    }
    CHECK(recolor::catalog(1) == recolor::cycle_pattern(5).target);
    CHECK(thrown_code([] { recolor::catalog(0); }) == errc::bad_index);
    CHECK(thrown_code([] { recolor::catalog(11); }) == errc::bad_index);
}

TEST_CASE("catalog false twins") {
    using pairs_t = std::vector<std::pair<int, int>>;
    const pairs_t expected[] = {
        {},                                    // G1
        {{1, 5}, {4, 5}},                      // G2
        {{4, 5}, {6, 2}},                      // G3
        {{4, 5}, {4, 6}},                      // G4
        {{4, 5}, {4, 6}, {7, 1}, {7, 5}},      // G5
        {{4, 5}, {7, 0}},                      // G6
        {{6, 1}, {6, 3}, {7, 0}, {7, 4}},      // G7
        {{1, 6}, {2, 7}},                      // G8
        {{1, 6}, {2, 7}, {8, 4}, {8, 5}},      // G9
        {},                                    // G10
    };
    for (int i = 1; i <= 10; ++i) {
        const Graph g = recolor::catalog(i);
        CHECK(recolor::false_twins(g) == expected[i - 1]);
        CHECK(recolor::false_twins(g) == oracle::false_twins(g));
    }
}

TEST_CASE("catalog frozen 3-colorings") {
    const std::vector<std::vector<int>> witnesses = {
        {}, {}, {},
        {1, 2, 1, 2, 3, 3, 3},           // G4
        {},
        {1, 2, 1, 2, 3, 3, 3, 1},        // G6
        {},
        {1, 2, 3, 1, 3, 2, 2, 3},        // G8
        {},
        {1, 2, 1, 3, 2, 2, 3, 1, 3},     // G10
    };
    for (int i = 1; i <= 10; ++i) {
        const Graph g = recolor::catalog(i);
        const auto found = recolor::search_frozen(g, 3);
        if (witnesses[i - 1].empty()) {
            CHECK_FALSE(found.has_value());
        } else {
            REQUIRE(found.has_value());
            CHECK(found->assign == witnesses[i - 1]);
            CHECK(recolor::is_frozen(g, *found));
        }
    }
}

TEST_CASE("expansion families") {
    for (int m = 1; m <= 3; ++m) {
        const Graph g1 = recolor::family_g1(m);
        CHECK(g1.order() == 4 + 2 * m);
        CHECK(g1.connected());
        CHECK(recolor::is_pl_free(g1, 5));

        const Graph g4 = recolor::family_g4(m);
        CHECK(g4.order() == 6 + 2 * m);
        CHECK(g4.connected());
        CHECK(recolor::is_pl_free(g4, 5));
    }
    CHECK(degree_sequence(recolor::family_g4(1)) == std::vector<int>{3, 3, 3, 3, 3, 3, 5, 5});
    // m = 1 expands a single K2, so the base graph embeds with one twin added.
    CHECK(recolor::family_g1(1).order() == 6);
    CHECK(recolor::family_g10() == recolor::catalog(10));
    CHECK(thrown_code([] { recolor::family_g1(0); }) == errc::bad_index);
    CHECK(thrown_code([] { recolor::family_g4(0); }) == errc::bad_index);

    // The expanded pair is labeled by its origin and stays homogeneous.
    const Graph f = recolor::family_g4(1);
    const int a = recolor::find_label(f, "x_5_1");
    const int b = recolor::find_label(f, "x_5_2");
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(f.adj(a, b));
    CHECK(recolor::is_homogeneous(f, recolor::VertexSet::of(f.order(), {a, b})));
}

TEST_CASE("identification fixtures") {
    const auto fx = recolor::fixtures();
    REQUIRE(fx.size() == 2);
    CHECK(fx[0].tag == "case-1");
    CHECK(fx[1].tag == "case-2");

    CHECK(fx[0].graph.order() == 7);
    CHECK(fx[0].graph.label(0) == "z");
    CHECK(fx[0].coloring.assign == std::vector<int>{1, 2, 3, 2, 3, 2, 3});
    CHECK(fx[0].graph == identify(recolor::family_g4(1), 0, 3));

    CHECK(fx[1].graph.order() == 8);
    CHECK(fx[1].graph.label(1) == "z");
    CHECK(fx[1].coloring.assign == std::vector<int>{3, 2, 1, 3, 1, 2, 1, 3});
    CHECK(fx[1].graph == identify(recolor::catalog(10), 1, 5));

    for (const auto& f : fx) {
        CHECK_NOTHROW(recolor::validate_coloring(f.graph, f.coloring));
        CHECK(recolor::is_pl_free(f.graph, 5));
        CHECK(recolor::chromatic_number(f.graph) == 3);
    }
}

TEST_CASE("identification scales with the expansion size") {
    // The same identification drawn at m = 3: eleven vertices, alternating
    // colors on the expanded pairs, still proper and P5-free.
    const Graph g = identify(recolor::family_g4(3), 0, 3);
    CHECK(g.order() == 11);
    const ProperColoring c{3, {1, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3}};
    CHECK_NOTHROW(recolor::validate_coloring(g, c));
    CHECK(recolor::is_pl_free(g, 5));
    CHECK(recolor::chromatic_number(g) == 3);
}
