#include <gtest/gtest.h>

#include <lkconvex/generators.hpp>
#include <lkconvex/paths.hpp>

#include "brute_force.hpp"
#include "fixtures.hpp"

using namespace lkconvex;
using fixtures::lbl_seq;

namespace {

std::vector<std::vector<vertex_t>> sequences(const std::vector<InducedPath>& ps) {
    std::vector<std::vector<vertex_t>> out;
    for (const auto& p : ps) out.push_back(p.vertices);
    return out;
}

} // namespace

TEST(InducedPaths, TwoStepUpToThreeEdges) {
    auto ps = induced_paths_between(two_step_graph(), 0, 6, 3);
    EXPECT_EQ(sequences(ps), (std::vector<std::vector<vertex_t>>{lbl_seq({1, 2, 5, 7})}));
    EXPECT_EQ(ps[0].length(), 3u);
}

TEST(InducedPaths, TwoStepUpToFourEdgesInLexicographicOrder) {
    auto ps = induced_paths_between(two_step_graph(), 0, 6, 4);
    EXPECT_EQ(sequences(ps), (std::vector<std::vector<vertex_t>>{lbl_seq({1, 2, 4, 6, 7}), lbl_seq({1, 2, 5, 7}),
                                                                  lbl_seq({1, 3, 4, 5, 7}), lbl_seq({1, 3, 4, 6, 7})}));
}

TEST(InducedPaths, AdjacentPairOnlyHasTheEdge) {
    auto g = two_step_graph();
    for (std::size_t len : {1u, 3u, 6u}) {
        auto ps = induced_paths_between(g, 3, 4, len);
        ASSERT_EQ(ps.size(), 1u);
        EXPECT_EQ(ps[0].vertices, (std::vector<vertex_t>{3, 4}));
    }
}

TEST(InducedPaths, Errors) {
    auto g = two_step_graph();
    EXPECT_THROW(induced_paths_between(g, 1, 1, 3), InvalidArgument);
    EXPECT_THROW(induced_paths_between(g, 0, 9, 3), InvalidVertex);
    EXPECT_THROW(induced_paths_between(g, 0, 1, 0), InvalidArgument);
}

// Every enumerated path is induced, within the bound, listed once, sorted,
// and the enumeration agrees with a permutation scan.
TEST(InducedPaths, MatchBruteForceOnRandomGraphs) {
    Rng rng(Seed{2024});
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 2 + rng.below(7);
        auto g = random_connected_graph(n, rng.unit() * 0.6, Seed{rng.next()});
        vertex_t u = static_cast<vertex_t>(rng.below(n));
        vertex_t v = static_cast<vertex_t>(rng.below(n));
        if (u == v) continue;
        std::size_t k = 1 + rng.below(n);
        auto ps = induced_paths_between(g, u, v, k);
        std::set<std::vector<vertex_t>> got;
        for (const auto& p : ps) {
            EXPECT_TRUE(is_induced_path(g, p));
            EXPECT_LE(p.length(), k);
            EXPECT_EQ(p.front(), u);
            EXPECT_EQ(p.back(), v);
            got.insert(p.vertices);
        }
        EXPECT_EQ(got.size(), ps.size());
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
        EXPECT_EQ(got, brute::induced_paths(g, u, v, k));
    }
}

TEST(InducedPaths, VisitorCanStopEarly) {
    int seen = 0;
    bool finished = for_each_induced_path_between(two_step_graph(), 0, 6, 6, [&](const InducedPath&) {
        ++seen;
        return false;
    });
    EXPECT_FALSE(finished);
    EXPECT_EQ(seen, 1);
}

TEST(ContainsInducedPath, Examples) {
    auto g = two_step_graph();
    auto p4 = contains_induced_path(g, 4);
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->vertices.size(), 4u);
    EXPECT_TRUE(is_induced_path(g, *p4));

    EXPECT_FALSE(contains_induced_path(complete(6), 3));
    EXPECT_TRUE(contains_induced_path(path(4), 4));
    EXPECT_FALSE(contains_induced_path(path(4), 5));

    auto p5 = contains_induced_path(g, 5);
    ASSERT_TRUE(p5); // not P_5-free, e.g. 1-3-4-6-7
    EXPECT_TRUE(is_induced_path(g, lbl_seq({1, 3, 4, 6, 7})));
    EXPECT_THROW(contains_induced_path(g, 1), InvalidArgument);
}

TEST(ContainsInducedPath, MatchesBruteForce) {
    for (std::uint64_t s = 0; s < 80; ++s) {
        auto g = random_connected_graph(2 + s % 7, 0.3, Seed{s + 500});
        for (std::size_t m = 2; m <= g.order(); ++m) {
            bool expected = false;
            for (vertex_t a = 0; a < g.order() && !expected; ++a)
                for (vertex_t b = a + 1; b < g.order() && !expected; ++b)
                    for (const auto& p : brute::induced_paths(g, a, b, g.order()))
                        if (p.size() == m) expected = true;
            EXPECT_EQ(contains_induced_path(g, m).has_value(), expected) << "seed " << s << " m " << m;
        }
    }
}
