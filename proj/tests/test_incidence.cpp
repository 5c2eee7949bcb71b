// test_incidence.cpp

#include "berge/incidence.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace berge;

namespace {

Hypergraph k4_3() { return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i) {
        VertexSet e;
        while (e.empty())
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) e.push_back(v);
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

VertexSet bits(std::uint64_t s, int n) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (s >> v & 1) out.push_back(v);
    return out;
}

}  // namespace

TEST(IncidenceGraph, CompleteThreeUniform) {
    const auto g = incidence_graph(k4_3());
    EXPECT_EQ(g.x_count(), 4);
    EXPECT_EQ(g.y_count(), 4);
    for (int x = 0; x < 4; ++x) EXPECT_EQ(g.x_neighbors(x).size(), 3u);
    for (int y = 0; y < 4; ++y) EXPECT_EQ(g.y_neighbors(y).size(), 3u);
    EXPECT_EQ(g.edge_count(), 12);
}

TEST(IncidenceGraph, DirectTranscription) {
    const auto g = incidence_graph(Hypergraph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(g.x_neighbors(0), (std::vector<int>{0, 1}));
    EXPECT_EQ(g.x_neighbors(1), (std::vector<int>{1, 2}));
    EXPECT_EQ(g.y_neighbors(1), (std::vector<int>{0, 1}));
    EXPECT_EQ(g.neighbors(g.y_vertex(1)), (std::vector<int>{0, 1}));
    EXPECT_EQ(g.neighbors(0), (std::vector<int>{2, 3}));
    EXPECT_EQ(g.x_row(1), 0b110u);
}

TEST(HypergraphOf, InversePairAndErrors) {
    EXPECT_EQ(hypergraph_of(incidence_graph(k4_3())), k4_3());
    EXPECT_EQ(hypergraph_of(BipartiteGraph(2, {{0, 1}})), Hypergraph(2, {{0, 1}}));
    EXPECT_THROW(hypergraph_of(BipartiteGraph(2, {{0, 1}, {}})), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(2, {{1, 1}}), std::invalid_argument);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto h = random_hypergraph(rng, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 6));
        EXPECT_EQ(hypergraph_of(incidence_graph(h)), h);
    }
}

TEST(StrongDeleteY, Examples) {
    const auto g = incidence_graph(Hypergraph(3, {{0, 1}, {1, 2}}));
    const auto r = strong_delete_y(g, {1});
    EXPECT_EQ(r.graph.x_count(), 0);
    EXPECT_EQ(r.graph.y_count(), 2);
    EXPECT_EQ(r.y_origin, (std::vector<int>{0, 2}));
    EXPECT_EQ(y_components_after(g, 0b010), 2);

    const auto same = strong_delete_y(g, {});
    EXPECT_EQ(same.graph, g);
    EXPECT_THROW(strong_delete_y(g, {3}), std::invalid_argument);
}

TEST(StrongDeleteY, CommutesWithHypergraphDeletion) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto h = random_hypergraph(rng, n, static_cast<int>(rng() % 7));
        const auto g = incidence_graph(h);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            const auto set = bits(s, n);
            const auto del = strong_delete_y(g, set);
            EXPECT_FALSE(del.graph.has_isolated_x());
            const auto hd = strong_delete(h, set);
            EXPECT_EQ(hypergraph_of(del.graph), hd.graph);
            EXPECT_EQ(del.y_origin, hd.vertex_origin);
            EXPECT_EQ(del.x_origin, hd.edge_origin);
        }
    }
}

TEST(YToughness, Examples) {
    // Independent check of the K4^(3) value straight from the definition.
    const auto o = oracle::hypergraph_toughness(4, k4_3().edges());
    ASSERT_TRUE(o);
    const auto t = y_toughness(incidence_graph(k4_3()));
    EXPECT_EQ(t.value, Rational(o->first, o->second));
    EXPECT_EQ(t.value, Rational(1, 1));

    const auto s = y_toughness(incidence_graph(Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}})));
    EXPECT_EQ(s.value, Rational(1, 3));
    EXPECT_EQ(s.witness, (VertexSet{0}));

    EXPECT_TRUE(y_toughness(incidence_graph(Hypergraph(2, {{0, 1}}))).infinite);
    EXPECT_THROW(y_toughness(BipartiteGraph(2, {{}})), std::invalid_argument);
    EXPECT_THROW(y_toughness(BipartiteGraph(21, {})), BudgetExceeded);
}

TEST(YToughness, EqualsHypergraphToughness) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto h = random_hypergraph(rng, n, static_cast<int>(rng() % 8));
        EXPECT_EQ(y_toughness(incidence_graph(h)), toughness(h));
    }
}

TEST(YToughness, EveryComponentHasAYVertex) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto g = incidence_graph(random_hypergraph(rng, n, static_cast<int>(rng() % 7)));
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool x_only = true;
            y_components_after(g, s, &x_only);
            EXPECT_FALSE(x_only);
        }
    }
}
