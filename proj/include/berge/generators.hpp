// generators.hpp
// Seeded random hypergraphs and exhaustive edge-multiset enumeration.

#pragma once

#include "berge/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace berge {

struct GenParams {
    int n = 1;
    int m = 0;
    int size_lo = 2;  // edge sizes drawn uniformly from [size_lo, size_hi]
    int size_hi = 2;
    std::uint64_t seed = 0;
    bool connected_only = false;  // redraw until the hypergraph is connected
};

/// Deterministic in (params, seed) on every platform: draws come from
/// std::mt19937_64 with hand-rolled bounded sampling. Duplicate edges are
/// allowed. Throws std::invalid_argument on an impossible size law.
Hypergraph gen_random_hypergraph(const GenParams& p);

/// Uniform integer in [lo, hi] by rejection sampling.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Stateless seed derivation for the t-th trial of a run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Every hypergraph on n vertices whose edges have sizes in [size_lo,
/// size_hi], as edge multisets of size 0..m_max. Multisets are visited in
/// canonical order (by size, then lexicographically on candidate-edge
/// indices) with each edge list sorted. Returns the number visited; the
/// visitor may return false to stop early.
std::uint64_t enumerate_hypergraphs(int n, int size_lo, int size_hi, int m_max,
                                    const std::function<bool(const Hypergraph&)>& visit);

/// Every simple graph on n vertices (as a 2-uniform hypergraph), in order of
/// the bit mask over vertex pairs (0,1), (0,2), ..., (n-2,n-1).
std::uint64_t enumerate_graphs(int n, const std::function<bool(const Hypergraph&)>& visit);

}  // namespace berge
