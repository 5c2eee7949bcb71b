// test_factor_solver.cpp

#include "berge/factor_solver.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace berge;

namespace {

int count_role(const GadgetGraph& gad, int host, GadgetRole role) {
    int c = 0;
    for (const auto& v : gad.vertices) c += v.host == host && v.role == role;
    return c;
}

int count_host(const GadgetGraph& gad, int host) {
    int c = 0;
    for (const auto& v : gad.vertices) c += v.host == host;
    return c;
}

Hypergraph cycle5() { return Hypergraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Hypergraph star() { return Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}}); }
Hypergraph k4_3() { return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace

TEST(BuildGadget, SizesPerHostVertex) {
    // x0 ~ y0,y1,y2; x1 ~ y0,y1; x2 ~ y0,y2; k = 1.
    const BipartiteGraph g(3, {{0, 1, 2}, {0, 1}, {0, 2}});
    const auto b = build_gadget(g, DegreeSpec(1));
    ASSERT_FALSE(b.infeasible());
    const auto& gad = *b.gadget;
    EXPECT_EQ(count_host(gad, 0), 6);
    EXPECT_EQ(count_role(gad, 0, GadgetRole::outer), 3);
    EXPECT_EQ(count_role(gad, 0, GadgetRole::core), 1);
    EXPECT_EQ(count_role(gad, 0, GadgetRole::slack_p), 1);
    const int y0 = g.y_vertex(0);
    EXPECT_EQ(count_host(gad, y0), 5);
    EXPECT_EQ(count_role(gad, y0, GadgetRole::core), 2);

    // Total size formula: sum of 2d - f + (f - g).
    int expect = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = static_cast<int>(g.neighbors(v).size());
        expect += 2 * d - gad.upper[v] + (gad.upper[v] - gad.lower[v]);
    }
    EXPECT_EQ(gad.graph.vertex_count(), expect);
    EXPECT_EQ(gad.cross.size(), 7u);
    for (auto [a, c] : gad.cross) EXPECT_TRUE(gad.graph.has_edge(a, c));
}

TEST(BuildGadget, DegreeOneXAndInfeasibleMarker) {
    const BipartiteGraph g(2, {{0}, {0, 1}});
    const auto b = build_gadget(g, DegreeSpec(1));
    ASSERT_FALSE(b.infeasible());
    EXPECT_EQ(b.gadget->upper[0], 0);
    EXPECT_EQ(count_role(*b.gadget, 0, GadgetRole::core), 1);

    const auto bad = build_gadget(BipartiteGraph(2, {{0, 1}}), DegreeSpec(2));
    EXPECT_TRUE(bad.infeasible());
    EXPECT_EQ(bad.deficient_y, 0);
    EXPECT_THROW(build_gadget(BipartiteGraph(2, {{}}), DegreeSpec(1)), std::invalid_argument);
}

TEST(FindFactor, Examples) {
    const auto c5 = incidence_graph(cycle5());
    const auto f = find_2k_factor(c5, DegreeSpec(2));
    ASSERT_TRUE(f);
    EXPECT_TRUE(verify_2k_factor(c5, DegreeSpec(2), *f));
    EXPECT_EQ(f->chosen.size(), 10u);
    EXPECT_TRUE(oracle::has_2k_factor(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, 2));

    SolveOptions cc;
    cc.cross_check = true;
    SolverTrace tr;
    EXPECT_FALSE(find_2k_factor(incidence_graph(star()), DegreeSpec(1), cc, &tr));
    EXPECT_TRUE(tr.cross_checked);

    const auto single = find_2k_factor(BipartiteGraph(2, {{0, 1}}), DegreeSpec(1));
    ASSERT_TRUE(single);
    EXPECT_EQ(single->chosen, (std::vector<std::pair<int, int>>{{0, 0}, {0, 1}}));

    SolverTrace t2;
    EXPECT_FALSE(find_2k_factor(BipartiteGraph(2, {{0, 1}}), DegreeSpec(2), {}, &t2));
    EXPECT_EQ(t2.deficient_y, 0);
}

TEST(VerifyFactor, Rejections) {
    const auto c5 = incidence_graph(cycle5());
    const DegreeSpec k2(2);
    auto f = *find_2k_factor(c5, k2);
    f.chosen.pop_back();
    const auto v1 = verify_2k_factor(c5, k2, f);
    EXPECT_FALSE(v1);
    EXPECT_NE(v1.reason.find("expected 0 or 2"), std::string::npos);

    const auto v2 = verify_2k_factor(c5, k2, FactorSubgraph{2, {}});
    EXPECT_FALSE(v2);
    EXPECT_NE(v2.reason.find("y0 has degree 0"), std::string::npos);

    EXPECT_NE(verify_2k_factor(c5, k2, FactorSubgraph{2, {{9, 0}}}).reason.find("malformed"), std::string::npos);
    EXPECT_NE(verify_2k_factor(c5, k2, FactorSubgraph{2, {{0, 3}}}).reason.find("not a host edge"),
              std::string::npos);
}

TEST(LiftToBerge, Examples) {
    const auto c5 = cycle5();
    const auto f = *find_2k_factor(incidence_graph(c5), DegreeSpec(2));
    const auto cert = lift_to_berge(c5, f);
    ASSERT_EQ(cert.pairs.size(), 5u);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(cert.pairs[i].edge, i);
        EXPECT_EQ(cert.pairs[i].u, c5.edge(i)[0]);
        EXPECT_EQ(cert.pairs[i].v, c5.edge(i)[1]);
    }
    EXPECT_TRUE(verify_berge_factor(c5, cert));

    const auto k4 = k4_3();
    const auto fk = find_2k_factor(incidence_graph(k4), DegreeSpec(1));
    ASSERT_TRUE(fk);
    const auto ck = lift_to_berge(k4, *fk);
    EXPECT_EQ(ck.pairs.size(), 2u);
    EXPECT_NE(ck.pairs[0].edge, ck.pairs[1].edge);
    EXPECT_TRUE(verify_berge_factor(k4, ck));

    const Hypergraph multi(2, {{0, 1}, {0, 1}});
    const auto fm = find_2k_factor(incidence_graph(multi), DegreeSpec(2));
    ASSERT_TRUE(fm);
    const auto cm = lift_to_berge(multi, *fm);
    ASSERT_EQ(cm.pairs.size(), 2u);
    EXPECT_EQ(cm.pairs[0].edge, 0);
    EXPECT_EQ(cm.pairs[1].edge, 1);
    EXPECT_TRUE(verify_berge_factor(multi, cm));

    EXPECT_THROW(lift_to_berge(c5, FactorSubgraph{2, {}}), std::invalid_argument);
}

TEST(FindFactor, AgreesWithCriterionAndEnumeration) {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 300; ++t) {
        const int nx = 1 + static_cast<int>(rng() % 6), ny = 1 + static_cast<int>(rng() % 6);
        const auto rows = oracle::random_rows(rng, nx, ny, 0.5);
        const BipartiteGraph g(ny, rows);
        const int k = 1 + static_cast<int>(rng() % 3);
        const DegreeSpec spec(k);
        const auto f = find_2k_factor(g, spec);
        if (f) EXPECT_TRUE(verify_2k_factor(g, spec, *f));
        if (g.edge_count() <= 20) EXPECT_EQ(f.has_value(), oracle::has_2k_factor(ny, rows, k));
        if (g.vertex_count() <= 12) EXPECT_EQ(f.has_value(), decide_by_criterion(g, spec).exists);
    }
}

TEST(LiftToBerge, RoundTripOnRandomHypergraphs) {
    std::mt19937_64 rng(71);
    int lifted = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % 8);
        std::vector<VertexSet> edges;
        for (int i = 0; i < m; ++i) {
            VertexSet e;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) e.push_back(v);
            if (e.size() < 2) e = {0, 1};
            edges.push_back(e);
        }
        const Hypergraph h(n, edges);
        const int k = 1 + static_cast<int>(rng() % 2);
        const auto f = find_2k_factor(incidence_graph(h), DegreeSpec(k));
        if (!f) continue;
        EXPECT_TRUE(verify_berge_factor(h, lift_to_berge(h, *f)));
        ++lifted;
    }
    EXPECT_GT(lifted, 30);
}
