#include <gtest/gtest.h>

#include <lkconvex/generators.hpp>
#include <lkconvex/graph.hpp>

#include "brute_force.hpp"
#include "fixtures.hpp"

using namespace lkconvex;
using fixtures::lbl;

TEST(Graph, FromEdgeListK2) {
    std::vector<Edge> e{{0, 1}};
    auto g = from_edge_list(2, e);
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, DuplicatesCollapse) {
    auto g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, TwoStepConstruction) {
    auto g = two_step_graph();
    EXPECT_EQ(g.order(), 7u);
    EXPECT_EQ(g.size(), 11u);
    EXPECT_TRUE(g.adjacent(4, 6));  // 5-7
    EXPECT_FALSE(g.adjacent(0, 3)); // 1-4
}

TEST(Graph, ConstructionErrorsNameThePair) {
    try {
        Graph::from_edge_list(3, {{0, 0}});
        FAIL() << "self-loop accepted";
    } catch (const InvalidGraph& e) {
        EXPECT_NE(std::string(e.what()).find("(0, 0)"), std::string::npos);
    }
    EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), InvalidGraph);
    EXPECT_THROW(Graph::from_edge_list(0, {}), InvalidGraph);
}

TEST(Graph, Connectivity) {
    EXPECT_TRUE(is_connected(complete(2)));
    EXPECT_FALSE(is_connected(Graph::from_edge_list(2, {})));
    EXPECT_TRUE(is_connected(two_step_graph()));
    EXPECT_TRUE(is_connected(complete(1)));
}

TEST(Graph, Distances) {
    auto g = two_step_graph();
    EXPECT_EQ(distance(g, 0, 6), 3u); // 1-2-5-7
    EXPECT_EQ(distance(g, 3, 3), 0u);
    EXPECT_EQ(distance(complete(5), 1, 3), 1u);
    EXPECT_EQ(distance(path(5), 0, 4), 4u);
    EXPECT_FALSE(distance(Graph::from_edge_list(2, {}), 0, 1).has_value());
    EXPECT_THROW(distance(g, 0, 7), InvalidVertex);
}

TEST(Graph, Diameter) {
    EXPECT_EQ(diameter(two_step_graph()), 3u);
    EXPECT_EQ(diameter(complete(6)), 1u);
    for (std::size_t m = 1; m < 8; ++m) EXPECT_EQ(diameter(path(m + 1)), m);
    EXPECT_THROW(diameter(Graph::from_edge_list(3, {{0, 1}})), DisconnectedGraph);
    // first pair at the maximum distance: labels 1 and 6
    EXPECT_EQ(diametral_pair(two_step_graph()), (FarPair{0, 5, 3}));
}

TEST(Graph, SimplicialVertices) {
    EXPECT_EQ(simplicial_vertices(two_step_graph()), lbl({1, 7}));
    EXPECT_EQ(simplicial_vertices(complete(5)), VertexSet::full(5));
    EXPECT_TRUE(simplicial_vertices(cycle(5)).empty());
}

TEST(Graph, SimplicialMatchesBruteForce) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto g = random_connected_graph(3 + s % 7, 0.35, Seed{s});
        EXPECT_EQ(brute::mask_of(simplicial_vertices(g)), brute::simplicial(g, (1u << g.order()) - 1));
    }
}

TEST(Graph, InducedSubgraph) {
    auto g = two_step_graph();
    auto sub = induced_subgraph(g, lbl({2, 3, 4, 5}));
    EXPECT_EQ(sub.graph.order(), 4u);
    EXPECT_EQ(sub.to_host, fixtures::lbl_seq({2, 3, 4, 5}));
    // 2-3, 2-4, 2-5, 3-4, 4-5 relabeled to 0..3
    EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(sub.from_host[0], std::nullopt);
    EXPECT_EQ(sub.from_host[4], 3u);

    EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
    auto single = induced_subgraph(g, lbl({4}));
    EXPECT_EQ(single.graph.order(), 1u);
    EXPECT_EQ(single.graph.size(), 0u);
    EXPECT_THROW(induced_subgraph(g, VertexSet(7)), InvalidArgument);
}

// Adding edges never increases the diameter.
TEST(Graph, DiameterMonotoneUnderEdgeAddition) {
    Rng rng(Seed{99});
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng.below(9);
        auto g = random_connected_graph(n, 0.1, Seed{rng.next()});
        auto edges = g.edges();
        std::size_t before = diameter(g);
        EXPECT_EQ(before, brute::diameter(g));
        vertex_t u = static_cast<vertex_t>(rng.below(n)), v = static_cast<vertex_t>(rng.below(n));
        if (u == v) continue;
        edges.emplace_back(u, v);
        EXPECT_LE(diameter(Graph::from_edge_list(n, edges)), before);
    }
}
