// test_experiments.cpp
// Generators, theorem verification and the tightness search.

#include "berge/experiments.hpp"
#include "berge/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace berge;

TEST(Generators, Deterministic) {
    GenParams p;
    p.n = 4;
    p.m = 4;
    p.size_lo = p.size_hi = 3;
    p.seed = 7;
    const auto a = gen_random_hypergraph(p), b = gen_random_hypergraph(p);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.edge_count(), 4);
    for (const auto& e : a.edges()) EXPECT_EQ(e.size(), 3u);
    p.seed = 8;
    bool differs = false;
    for (std::uint64_t s = 8; s < 20 && !differs; ++s) {
        p.seed = s;
        differs = !(gen_random_hypergraph(p) == a);
    }
    EXPECT_TRUE(differs);
}

TEST(Generators, EdgelessAndErrors) {
    GenParams p;
    p.n = 3;
    p.m = 0;
    const auto h = gen_random_hypergraph(p);
    EXPECT_EQ(h.edge_count(), 0);
    const auto t = toughness(h);
    EXPECT_FALSE(t.infinite);
    EXPECT_EQ(t.value, Rational(0, 1));
    EXPECT_TRUE(t.witness.empty());

    GenParams bad;
    bad.n = 2;
    bad.size_lo = bad.size_hi = 3;
    bad.m = 1;
    EXPECT_THROW(gen_random_hypergraph(bad), std::invalid_argument);
    bad.size_lo = 2;
    bad.size_hi = 1;
    EXPECT_THROW(gen_random_hypergraph(bad), std::invalid_argument);
}

TEST(Generators, ConnectedOnly) {
    GenParams p;
    p.n = 6;
    p.m = 4;
    p.size_lo = 2;
    p.size_hi = 3;
    p.connected_only = true;
    for (std::uint64_t s = 0; s < 30; ++s) {
        p.seed = s;
        EXPECT_EQ(components(gen_random_hypergraph(p)).size(), 1u);
    }
}

TEST(Generators, UniformIntRange) {
    std::mt19937_64 rng(3);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        const int v = uniform_int(rng, -2, 3);
        EXPECT_GE(v, -2);
        EXPECT_LE(v, 3);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 6u);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

TEST(Generators, EnumerationCounts) {
    // n = 3, sizes 2..3: 4 candidate edges; multisets of size <= 2:
    // 1 + 4 + C(5,2) = 15.
    std::set<std::vector<VertexSet>> seen;
    const auto visited = enumerate_hypergraphs(3, 2, 3, 2, [&](const Hypergraph& h) {
        seen.insert(h.edges());
        return true;
    });
    EXPECT_EQ(visited, 15u);
    EXPECT_EQ(seen.size(), 15u);

    EXPECT_EQ(enumerate_graphs(4, [](const Hypergraph&) { return true; }), 64u);
    int stopped = 0;
    enumerate_graphs(4, [&](const Hypergraph&) { return ++stopped < 5; });
    EXPECT_EQ(stopped, 5);
}

TEST(TheoremGate, Examples) {
    EXPECT_TRUE(theorem_gate(4, 1));
    EXPECT_FALSE(theorem_gate(3, 1));
    EXPECT_TRUE(theorem_gate(4, 3));  // n = k + 1 is in scope
    EXPECT_FALSE(theorem_gate(4, 4));
    EXPECT_TRUE(theorem_gate(3, 2));
    EXPECT_FALSE(theorem_gate(2, 2));
}

TEST(VerifyTheorem, ExhaustiveKOne) {
    TheoremConfig cfg;
    cfg.k = 1;
    cfg.n_hi = 4;
    cfg.m_max = 4;
    const auto rep = verify_theorem(cfg);
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_GT(rep.hypothesis, 0u);
    EXPECT_EQ(rep.factors_found, rep.hypothesis);
    EXPECT_EQ(rep.certificates_verified, rep.factors_found + rep.below_with_factor);
    EXPECT_EQ(rep.total, rep.gated_out + rep.below_toughness + rep.hypothesis);
}

TEST(VerifyTheorem, GateSkipsWhenNBelowKPlusOne) {
    TheoremConfig cfg;
    cfg.k = 4;
    cfg.n_lo = 4;
    cfg.n_hi = 4;
    cfg.m_max = 2;
    const auto rep = verify_theorem(cfg);
    EXPECT_EQ(rep.gated_out, rep.total);
    EXPECT_EQ(rep.hypothesis, 0u);
}

TEST(VerifyTheorem, RandomIsReproducibleAndAudited) {
    TheoremConfig cfg;
    cfg.k = 2;
    cfg.n_hi = 7;
    cfg.mode = TheoremMode::random;
    cfg.trials = 60;
    cfg.seed = 11;
    cfg.m_max = 6;
    cfg.audit = true;
    const auto a = verify_theorem(cfg), b = verify_theorem(cfg);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.total, 60u);
    EXPECT_EQ(a.hypothesis, b.hypothesis);
    EXPECT_EQ(a.deltas_evaluated, b.deltas_evaluated);
    EXPECT_NE(a.porcelain().find("seed=11"), std::string::npos);
}

TEST(VerifyTheorem, BudgetAndArguments) {
    TheoremConfig cfg;
    cfg.n_hi = 6;
    EXPECT_THROW(verify_theorem(cfg), BudgetExceeded);
    cfg.mode = TheoremMode::random;
    cfg.trials = 1;
    cfg.n_hi = 11;
    EXPECT_THROW(verify_theorem(cfg), BudgetExceeded);
    cfg.n_hi = 4;
    cfg.n_lo = 5;
    EXPECT_THROW(verify_theorem(cfg), std::invalid_argument);
}

TEST(Tightness, BudgetZeroIsEmpty) {
    TightnessConfig cfg;
    cfg.budget = 0;
    const auto r = tightness_search(cfg);
    EXPECT_EQ(r.examined, 0u);
    EXPECT_FALSE(r.best);
}

TEST(Tightness, MonotoneInBudget) {
    TightnessConfig cfg;
    cfg.k = 1;
    cfg.n_max = 4;
    std::optional<Rational> last;
    for (std::uint64_t b : {1u, 10u, 40u, 70u, 200u}) {
        cfg.budget = b;
        const auto r = tightness_search(cfg);
        if (!r.best) continue;
        if (last) EXPECT_GE(r.best->tau.value, *last);
        last = r.best->tau.value;
    }
    ASSERT_TRUE(last);
}

TEST(Tightness, ExhaustiveGraphsMatchBruteForce) {
    // Maximum toughness over graphs on 2, 4, 6 vertices without a perfect
    // matching, from the graph oracles.
    std::optional<std::pair<int, int>> best;
    std::uint64_t graphs = 0;
    for (int n : {2, 4, 6}) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask, ++graphs) {
            std::vector<std::pair<int, int>> e;
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) {
                    e.push_back(pairs[i]);
                    adj[pairs[i].first][pairs[i].second] = adj[pairs[i].second][pairs[i].first] = true;
                }
            if (2 * oracle::max_matching_by_subsets(n, e) == n) continue;
            const auto t = oracle::graph_toughness(adj);
            ASSERT_TRUE(t);
            if (!best || t->first * best->second > best->first * t->second) best = t;
        }
    }
    ASSERT_TRUE(best);
    TightnessConfig cfg;
    cfg.k = 1;
    cfg.n_max = 6;
    cfg.budget = graphs;
    const auto r = tightness_search(cfg);
    EXPECT_EQ(r.examined, graphs);
    ASSERT_TRUE(r.best);
    EXPECT_EQ(r.best->tau.value, Rational(best->first, best->second));
    EXPECT_GE(r.best->tau.value, Rational(1, 2));
    ASSERT_TRUE(r.best->barrier);
    EXPECT_TRUE(r.best->barrier->is_barrier());
}
