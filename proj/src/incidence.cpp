// incidence.cpp

#include "berge/incidence.hpp"

#include <algorithm>
#include <bit>

namespace berge {

BipartiteGraph::BipartiteGraph(int y_count, std::vector<std::vector<int>> x_neighbors)
    : y_count_(y_count), x_adj_(std::move(x_neighbors)) {
    if (y_count_ < 0) throw std::invalid_argument("negative Y side size");
    y_adj_.assign(y_count_, {});
    for (std::size_t x = 0; x < x_adj_.size(); ++x) {
        auto& row = x_adj_[x];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("x" + std::to_string(x) + " lists a neighbour twice");
        if (!row.empty() && (row.front() < 0 || row.back() >= y_count_))
            throw std::invalid_argument("x" + std::to_string(x) + " has a neighbour out of range");
        for (int y : row) y_adj_[y].push_back(static_cast<int>(x));
        edges_ += static_cast<int>(row.size());
    }
    if (y_count_ <= 64) {
        x_rows_.reserve(x_adj_.size());
        for (const auto& row : x_adj_) {
            std::uint64_t m = 0;
            for (int y : row) m |= std::uint64_t{1} << y;
            x_rows_.push_back(m);
        }
    }
}

bool BipartiteGraph::has_isolated_x() const {
    return std::any_of(x_adj_.begin(), x_adj_.end(), [](const auto& r) { return r.empty(); });
}

std::vector<int> BipartiteGraph::neighbors(int v) const {
    std::vector<int> out;
    if (is_x(v)) {
        for (int y : x_adj_.at(v)) out.push_back(y_vertex(y));
    } else {
        out = y_adj_.at(v - x_count());
    }
    return out;
}

std::vector<std::pair<int, int>> BipartiteGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int x = 0; x < x_count(); ++x)
        for (int y : x_adj_[x]) out.emplace_back(x, y);
    return out;
}

BipartiteGraph incidence_graph(const Hypergraph& h) {
    std::vector<std::vector<int>> rows(h.edges().begin(), h.edges().end());
    return BipartiteGraph(h.vertex_count(), std::move(rows));
}

Hypergraph hypergraph_of(const BipartiteGraph& g) {
    if (g.has_isolated_x()) throw std::invalid_argument("not hypergraph-representable: isolated X-vertex");
    std::vector<VertexSet> edges;
    edges.reserve(g.x_count());
    for (int x = 0; x < g.x_count(); ++x) edges.push_back(g.x_neighbors(x));
    return Hypergraph(g.y_count(), std::move(edges));
}

BipartiteDeletion strong_delete_y(const BipartiteGraph& g, const VertexSet& s) {
    std::vector<int> y_index(g.y_count(), 0);
    for (int y : s) {
        if (y < 0 || y >= g.y_count()) throw std::invalid_argument("deleted Y-vertex out of range");
        y_index[y] = -1;
    }
    BipartiteDeletion out;
    for (int y = 0; y < g.y_count(); ++y) {
        if (y_index[y] < 0) continue;
        y_index[y] = static_cast<int>(out.y_origin.size());
        out.y_origin.push_back(y);
    }
    std::vector<std::vector<int>> rows;
    for (int x = 0; x < g.x_count(); ++x) {
        const auto& row = g.x_neighbors(x);
        if (std::any_of(row.begin(), row.end(), [&](int y) { return y_index[y] < 0; })) continue;
        std::vector<int> mapped;
        mapped.reserve(row.size());
        for (int y : row) mapped.push_back(y_index[y]);
        rows.push_back(std::move(mapped));
        out.x_origin.push_back(x);
    }
    out.graph = BipartiteGraph(static_cast<int>(out.y_origin.size()), std::move(rows));
    return out;
}

int y_components_after(const BipartiteGraph& g, std::uint64_t s, bool* x_only_component) {
    if (!g.has_bit_rows()) throw std::invalid_argument("y_components_after needs y_count <= 64");
    const int ny = g.y_count();
    const std::uint64_t full = ny == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ny) - 1;
    std::uint64_t alive_y = full & ~s;
    int count = 0;
    while (alive_y) {
        std::uint64_t comp = alive_y & -alive_y;
        for (;;) {
            std::uint64_t grown = comp;
            for (int x = 0; x < g.x_count(); ++x) {
                const std::uint64_t row = g.x_row(x);
                if (!(row & s) && (row & grown)) grown |= row;
            }
            if (grown == comp) break;
            comp = grown;
        }
        alive_y &= ~comp;
        ++count;
    }
    // Surviving X-vertices without any Y-neighbour form components of their own.
    bool x_only = false;
    for (int x = 0; x < g.x_count(); ++x) {
        if (g.x_row(x) == 0) {
            ++count;
            x_only = true;
        }
    }
    if (x_only_component) *x_only_component = x_only;
    return count;
}

ToughnessValue y_toughness(const BipartiteGraph& g, const Budget& budget) {
    if (g.has_isolated_x()) throw std::invalid_argument("y_toughness: isolated X-vertex");
    const int ny = g.y_count();
    if (ny > budget.y_toughness_vertices || ny > 63)
        throw BudgetExceeded("y-toughness: " + std::to_string(ny) +
                             " Y-vertices exceeds the enumeration budget of " +
                             std::to_string(std::min(budget.y_toughness_vertices, 63)));
    if (ny < 1) throw std::invalid_argument("y_toughness of a graph with empty Y side");
    const std::uint64_t full = (std::uint64_t{1} << ny) - 1;

    bool found = false;
    std::uint64_t best = 0;
    int best_size = 0, best_c = 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        const int size = std::popcount(s);
        if (ny - size < 2) continue;
        const int c = y_components_after(g, s);
        if (c < 2) continue;
        if (found) {
            const auto lhs = static_cast<std::int64_t>(size) * best_c;
            const auto rhs = static_cast<std::int64_t>(best_size) * c;
            if (lhs > rhs) continue;
            if (lhs == rhs) {
                if (size > best_size) continue;
                const std::uint64_t diff = s ^ best;
                if (size == best_size && !(best & diff & -diff)) continue;
            }
        }
        found = true;
        best = s;
        best_size = size;
        best_c = c;
    }
    if (!found) return ToughnessValue::make_infinite();
    ToughnessValue t;
    t.infinite = false;
    t.value = Rational(best_size, best_c);
    for (std::uint64_t m = best; m; m &= m - 1) t.witness.push_back(std::countr_zero(m));
    t.components = best_c;
    return t;
}

}  // namespace berge
