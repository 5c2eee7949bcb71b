// generators.cpp

#include "berge/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace berge {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finaliser over seed + index * golden ratio
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

Hypergraph draw(const GenParams& p, std::mt19937_64& rng) {
    std::vector<int> pool(p.n);
    std::vector<VertexSet> edges;
    edges.reserve(p.m);
    for (int i = 0; i < p.m; ++i) {
        const int size = uniform_int(rng, p.size_lo, p.size_hi);
        std::iota(pool.begin(), pool.end(), 0);
        // partial Fisher-Yates
        for (int j = 0; j < size; ++j) std::swap(pool[j], pool[uniform_int(rng, j, p.n - 1)]);
        edges.emplace_back(pool.begin(), pool.begin() + size);
    }
    return Hypergraph(p.n, std::move(edges));
}

}  // namespace

Hypergraph gen_random_hypergraph(const GenParams& p) {
    if (p.n < 1) throw std::invalid_argument("generator needs n >= 1");
    if (p.m < 0) throw std::invalid_argument("generator needs m >= 0");
    if (p.size_lo < 1 || p.size_lo > p.size_hi || p.size_hi > p.n)
        throw std::invalid_argument("impossible edge-size law [" + std::to_string(p.size_lo) + "," +
                                    std::to_string(p.size_hi) + "] for n=" + std::to_string(p.n));
    std::mt19937_64 rng(p.seed);
    if (!p.connected_only) return draw(p, rng);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto h = draw(p, rng);
        if (components(h).size() == 1) return h;
    }
    throw std::invalid_argument("no connected hypergraph found for these parameters");
}

std::uint64_t enumerate_hypergraphs(int n, int size_lo, int size_hi, int m_max,
                                    const std::function<bool(const Hypergraph&)>& visit) {
    std::vector<VertexSet> candidates;
    for (std::uint32_t mask = 1; n < 31 && mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < size_lo || size > size_hi) continue;
        VertexSet e;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) e.push_back(v);
        candidates.push_back(std::move(e));
    }
    std::sort(candidates.begin(), candidates.end());
    const int c = static_cast<int>(candidates.size());

    std::uint64_t visited = 0;
    std::vector<int> pick;
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0 && c == 0) break;
        pick.assign(m, 0);
        for (;;) {
            std::vector<VertexSet> edges;
            edges.reserve(m);
            for (int i : pick) edges.push_back(candidates[i]);
            ++visited;
            if (!visit(Hypergraph(n, std::move(edges)))) return visited;
            // next nondecreasing sequence
            int pos = m - 1;
            while (pos >= 0 && pick[pos] == c - 1) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int j = pos + 1; j < m; ++j) pick[j] = pick[pos];
        }
    }
    return visited;
}

std::uint64_t enumerate_graphs(int n, const std::function<bool(const Hypergraph&)>& visit) {
    std::vector<VertexSet> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    if (pairs.size() > 40) throw std::invalid_argument("enumerate_graphs: n too large");
    std::uint64_t visited = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<VertexSet> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        ++visited;
        if (!visit(Hypergraph(n, std::move(edges)))) break;
    }
    return visited;
}

}  // namespace berge
