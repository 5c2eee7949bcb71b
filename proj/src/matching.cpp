// matching.cpp
//
// Edmonds' algorithm: BFS for an augmenting path from one free root at a
// time, contracting odd cycles (blossoms) by relabelling their vertices with
// a common base. O(V^3) overall, which is ample for the gadget graphs built
// by the factor solver.

#include "berge/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

GeneralGraph::GeneralGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool GeneralGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

namespace {

class Blossom {
public:
    explicit Blossom(const GeneralGraph& g)
        : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> run() {
        for (const auto& [u, v] : g_.edges())
            if (mate_[u] < 0 && mate_[v] < 0) {
                mate_[u] = v;
                mate_[v] = u;
            }
        for (int root = 0; root < n_; ++root) {
            if (mate_[root] >= 0) continue;
            int end = find_path(root);
            while (end >= 0) {
                const int pv = parent_[end];
                const int next = mate_[pv];
                mate_[end] = pv;
                mate_[pv] = end;
                end = next;
            }
        }
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] < 0) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    // Returns the free endpoint of an augmenting path from root, or -1.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
                    const int b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (mate_[to] < 0) return to;
                    used_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    const GeneralGraph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

Matching max_matching(const GeneralGraph& g) {
    const auto mate = Blossom(g).run();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

std::vector<int> mates(const GeneralGraph& g, const Matching& m) {
    std::vector<int> mate(g.vertex_count(), -1);
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("matching edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} is not in the graph");
        if (mate[u] >= 0 || mate[v] >= 0)
            throw std::invalid_argument("matching edges share vertex");
        mate[u] = v;
        mate[v] = u;
    }
    return mate;
}

bool is_perfect(const GeneralGraph& g, const Matching& m) {
    mates(g, m);
    return 2 * m.size() == static_cast<std::size_t>(g.vertex_count());
}

}  // namespace berge
