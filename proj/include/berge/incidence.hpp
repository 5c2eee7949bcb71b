// incidence.hpp
// Bipartite graphs G[X,Y], the incidence graph of a hypergraph and its
// inverse, strong deletion of Y-sets and Y-toughness.

#pragma once

#include "berge/common.hpp"
#include "berge/hypergraph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace berge {

/// Bipartite graph with sides X = {0..x_count-1} and Y = {0..y_count-1}.
///
/// Some routines address both sides through one combined index space:
/// X-vertex x is vertex x, Y-vertex y is vertex x_count + y.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// `x_neighbors[x]` lists the Y-neighbours of x; each list is sorted and
    /// checked for range and repeats (std::invalid_argument).
    BipartiteGraph(int y_count, std::vector<std::vector<int>> x_neighbors);

    int x_count() const { return static_cast<int>(x_adj_.size()); }
    int y_count() const { return y_count_; }
    int vertex_count() const { return x_count() + y_count_; }
    int edge_count() const { return edges_; }

    const std::vector<int>& x_neighbors(int x) const { return x_adj_.at(x); }
    const std::vector<int>& y_neighbors(int y) const { return y_adj_.at(y); }

    /// Y-neighbourhood of x as a bit row; only when y_count <= 64.
    std::uint64_t x_row(int x) const { return x_rows_.at(x); }
    bool has_bit_rows() const { return !x_rows_.empty() || x_adj_.empty(); }

    bool has_isolated_x() const;

    /// Combined index helpers.
    bool is_x(int v) const { return v < x_count(); }
    int y_vertex(int y) const { return x_count() + y; }
    /// Neighbours of a combined-index vertex, in combined indices.
    std::vector<int> neighbors(int v) const;

    /// All incidences (x, y), x ascending then y ascending.
    std::vector<std::pair<int, int>> edge_list() const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.y_count_ == b.y_count_ && a.x_adj_ == b.x_adj_;
    }

private:
    int y_count_ = 0;
    int edges_ = 0;
    std::vector<std::vector<int>> x_adj_;
    std::vector<std::vector<int>> y_adj_;
    std::vector<std::uint64_t> x_rows_;
};

/// Strong deletion result with new -> old maps for both sides.
struct BipartiteDeletion {
    BipartiteGraph graph;
    std::vector<int> x_origin;
    std::vector<int> y_origin;
};

/// I(H): X = edges, Y = vertices, x ~ y iff edge x contains vertex y.
BipartiteGraph incidence_graph(const Hypergraph& h);

/// Inverse of incidence_graph: vertex set Y, edge x = N(x).
/// Throws std::invalid_argument ("not hypergraph-representable") on an
/// isolated X-vertex.
Hypergraph hypergraph_of(const BipartiteGraph& g);

/// G (-) S = G - (S u N(S)) for S a set of Y-vertices.
BipartiteDeletion strong_delete_y(const BipartiteGraph& g, const VertexSet& s);

/// Number of components of G (-) S, computed on the bipartite graph.
/// Requires bit rows (y_count <= 64, x_count <= 64).
int y_components_after(const BipartiteGraph& g, std::uint64_t s, bool* x_only_component = nullptr);

/// Exact Y-toughness over Y-cutsets; witness rule as for toughness().
/// Throws BudgetExceeded when y_count > budget.y_toughness_vertices.
ToughnessValue y_toughness(const BipartiteGraph& g, const Budget& budget = {});

/// A (2,k)-factor candidate: chosen incidences (x, y) of a host graph.
struct FactorSubgraph {
    int k = 0;
    std::vector<std::pair<int, int>> chosen;

    friend bool operator==(const FactorSubgraph&, const FactorSubgraph&) = default;
};

}  // namespace berge
