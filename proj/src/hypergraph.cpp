// hypergraph.cpp

#include "berge/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace berge {

Hypergraph::Hypergraph(int vertex_count, std::vector<VertexSet> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty()) throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
        if (e.front() < 0 || e.back() >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex out of range");
    }
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.size() == 2; });
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

VertexSet mask_to_set(std::uint64_t m) {
    VertexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

// For two cutsets of equal size: the one absent at the lowest differing vertex.
bool witness_before(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    return diff && (b & diff & -diff);
}

}  // namespace

std::vector<VertexSet> components(const Hypergraph& h) {
    const int n = h.vertex_count();
    DisjointSets ds(n);
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) ds.unite(e[0], e[i]);
    std::vector<VertexSet> parts;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        const int r = ds.find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[slot[r]].push_back(v);
    }
    return parts;
}

StrongDeletion strong_delete(const Hypergraph& h, const VertexSet& s) {
    const int n = h.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("deleted vertex out of range");
        gone[v] = 1;
    }
    StrongDeletion out;
    out.vertex_index.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        out.vertex_index[v] = static_cast<int>(out.vertex_origin.size());
        out.vertex_origin.push_back(v);
    }
    std::vector<VertexSet> edges;
    for (int i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        if (std::any_of(e.begin(), e.end(), [&](int v) { return gone[v]; })) continue;
        VertexSet mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(out.vertex_index[v]);
        edges.push_back(std::move(mapped));
        out.edge_origin.push_back(i);
    }
    out.graph = Hypergraph(static_cast<int>(out.vertex_origin.size()), std::move(edges));
    return out;
}

namespace detail {

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t{1} << v;
        masks.push_back(m);
    }
    return masks;
}

int count_components(const std::vector<std::uint64_t>& edges, std::uint64_t alive,
                     std::uint64_t deleted) {
    int count = 0;
    while (alive) {
        std::uint64_t comp = alive & -alive;
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t e : edges)
                if (!(e & deleted) && (e & grown)) grown |= e;
            if (grown == comp) break;
            comp = grown;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

}  // namespace detail

namespace {

void check_budget(const Hypergraph& h, int limit, const char* what) {
    if (h.vertex_count() > limit || h.vertex_count() > 63)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(h.vertex_count()) +
                             " vertices exceeds the enumeration budget of " +
                             std::to_string(std::min(limit, 63)));
}

}  // namespace

ToughnessValue toughness(const Hypergraph& h, const Budget& budget) {
    if (h.vertex_count() < 1) throw std::invalid_argument("toughness of the empty hypergraph");
    check_budget(h, budget.toughness_vertices, "toughness");
    const int n = h.vertex_count();
    const auto edges = detail::edge_masks(h);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    bool found = false;
    std::uint64_t best = 0;
    int best_size = 0, best_c = 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        const int size = std::popcount(s);
        if (n - size < 2) continue;
        const int c = detail::count_components(edges, full & ~s, s);
        if (c < 2) continue;
        if (found) {
            // size/c against best_size/best_c
            const auto lhs = static_cast<std::int64_t>(size) * best_c;
            const auto rhs = static_cast<std::int64_t>(best_size) * c;
            if (lhs > rhs) continue;
            if (lhs == rhs && (size > best_size || (size == best_size && !witness_before(s, best))))
                continue;
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
    t.witness = mask_to_set(best);
    t.components = best_c;
    return t;
}

bool is_complete(const Hypergraph& h, const Budget& budget) {
    check_budget(h, budget.toughness_vertices, "is_complete");
    const int n = h.vertex_count();
    const auto edges = detail::edge_masks(h);
    const std::uint64_t full = n ? (std::uint64_t{1} << n) - 1 : 0;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (std::popcount(s) > n - 2) continue;
        if (detail::count_components(edges, full & ~s, s) != 1) return false;
    }
    return true;
}

void BergeFactorCertificate::normalize() {
    for (auto& p : pairs)
        if (p.u > p.v) std::swap(p.u, p.v);
    std::sort(pairs.begin(), pairs.end());
}

Verdict verify_berge_factor(const Hypergraph& h, const BergeFactorCertificate& cert) {
    const int n = h.vertex_count();
    if (cert.k < 0) return Verdict::reject("malformed certificate: negative k");
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        const auto& p = cert.pairs[i];
        if (p.edge < 0 || p.edge >= h.edge_count() || p.u < 0 || p.u >= n || p.v < 0 || p.v >= n)
            return Verdict::reject("malformed certificate: pair " + std::to_string(i) +
                                   " has an index out of range");
        if (p.u == p.v)
            return Verdict::reject("malformed certificate: pair " + std::to_string(i) + " is a loop");
    }
    std::vector<int> host(h.edge_count(), -1);
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        const auto& p = cert.pairs[i];
        if (host[p.edge] >= 0)
            return Verdict::reject("injection violated: hyperedge " + std::to_string(p.edge) +
                                   " hosts pairs " + std::to_string(host[p.edge]) + " and " +
                                   std::to_string(i));
        host[p.edge] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        const auto& p = cert.pairs[i];
        const auto& e = h.edge(p.edge);
        if (!std::binary_search(e.begin(), e.end(), p.u) || !std::binary_search(e.begin(), e.end(), p.v))
            return Verdict::reject("containment violated: pair " + std::to_string(i) + " {" +
                                   std::to_string(p.u) + "," + std::to_string(p.v) +
                                   "} is not inside hyperedge " + std::to_string(p.edge));
    }
    std::vector<int> degree(n, 0);
    for (const auto& p : cert.pairs) {
        ++degree[p.u];
        ++degree[p.v];
    }
    for (int v = 0; v < n; ++v)
        if (degree[v] != cert.k)
            return Verdict::reject("regularity violated: vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(degree[v]) + ", expected " + std::to_string(cert.k));
    return Verdict::accept();
}

}  // namespace berge
