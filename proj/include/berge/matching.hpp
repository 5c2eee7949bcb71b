// matching.hpp
// Maximum-cardinality matching in general graphs (Edmonds' blossom
// shrinking).

#pragma once

#include <utility>
#include <vector>

namespace berge {

using Edge = std::pair<int, int>;

/// Simple undirected graph; edges stored as (u < v), sorted, no repeats.
class GeneralGraph {
public:
    GeneralGraph() = default;
    /// Throws std::invalid_argument on loops, out-of-range or parallel edges.
    GeneralGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct Matching {
    std::vector<Edge> edges;  // (u < v), sorted
    std::size_t size() const { return edges.size(); }
};

/// Maximum matching. Deterministic: greedy start in canonical edge order,
/// then augmentation from free vertices in index order.
Matching max_matching(const GeneralGraph& g);

/// Mate array of a matching (-1 for unmatched vertices).
std::vector<int> mates(const GeneralGraph& g, const Matching& m);

/// True iff m covers every vertex. Throws std::invalid_argument if m is not
/// a matching of g.
bool is_perfect(const GeneralGraph& g, const Matching& m);

}  // namespace berge
