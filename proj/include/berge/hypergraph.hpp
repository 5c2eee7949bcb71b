// hypergraph.hpp
// Hypergraph model with index-identified edges (multiset semantics),
// strong deletion, exact toughness, completeness and Berge-factor
// certificate checking.

#pragma once

#include "berge/common.hpp"

#include <cstdint>
#include <vector>

namespace berge {

/// Vertices are 0..n-1; edges are nonempty vertex sets identified by their
/// position in the edge list. Identical edges at different positions are
/// distinct edges.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Sorts each edge. Throws std::invalid_argument on an empty edge, an
    /// out-of-range vertex, or a repeated vertex inside one edge.
    Hypergraph(int vertex_count, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int i) const { return edges_.at(i); }

    /// True iff every edge has exactly two vertices.
    bool is_graph() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Result of H - S: surviving vertices and edges, densely reindexed.
struct StrongDeletion {
    Hypergraph graph;
    std::vector<int> vertex_index;   // old vertex -> new index, -1 if deleted
    std::vector<int> vertex_origin;  // new vertex -> old vertex
    std::vector<int> edge_origin;    // new edge -> old edge
};

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Hypergraph& h);

/// Deletes the vertices of s and every edge meeting s.
StrongDeletion strong_delete(const Hypergraph& h, const VertexSet& s);

/// Exact toughness by cutset enumeration. Among minimising cutsets the
/// witness is the smallest one, then the one whose characteristic vector
/// (vertex 0 first) is lexicographically least.
/// Throws BudgetExceeded when n > budget.toughness_vertices.
ToughnessValue toughness(const Hypergraph& h, const Budget& budget = {});

/// True iff H - S is connected for every S with |S| <= n - 2.
bool is_complete(const Hypergraph& h, const Budget& budget = {});

/// One graph edge {u, v} hosted by hyperedge `edge`.
struct BergePair {
    int edge = 0;
    int u = 0;
    int v = 0;

    friend auto operator<=>(const BergePair&, const BergePair&) = default;
};

/// A k-regular multigraph on V(H) together with its injection into E(H).
struct BergeFactorCertificate {
    int k = 0;
    std::vector<BergePair> pairs;

    /// Orders each pair (u < v) and sorts pairs by edge index.
    void normalize();

    friend bool operator==(const BergeFactorCertificate&, const BergeFactorCertificate&) = default;
};

/// Checks injectivity, containment and k-regularity against h.
Verdict verify_berge_factor(const Hypergraph& h, const BergeFactorCertificate& cert);

namespace detail {

// Bit-row helpers shared by the toughness kernels; require n <= 64.
std::vector<std::uint64_t> edge_masks(const Hypergraph& h);
int count_components(const std::vector<std::uint64_t>& edges, std::uint64_t alive,
                     std::uint64_t deleted);

}  // namespace detail

}  // namespace berge
