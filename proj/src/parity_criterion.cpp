// parity_criterion.cpp
//
// Two evaluation routes for the deficiency
//   delta(A,B) = f(A) - g(B) + sum_{v in B} d_{G-A}(v) - h_W(A,B):
//
//   evaluate_pair()  straightforward recomputation for one pair;
//   scan kernel      all 3^|V| pairs, grouped by R = A u B. The components of
//                    G - R are computed once per R; the 2^|R| splits of R into
//                    (A, B) are then walked in Gray-code order with O(1)
//                    updates of every term, the odd-component count being a
//                    popcount over per-vertex component parity masks.

#include "berge/parity_criterion.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

namespace berge {

DegreeSpec::DegreeSpec(int k_) : k(k_) {
    if (k < 1 || k > 8) throw std::invalid_argument("k must lie in [1, 8], got " + std::to_string(k));
}

namespace {

enum : char { kNeither = 0, kInA = 1, kInB = 2 };

std::vector<char> pair_states(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b) {
    const int n = g.vertex_count();
    std::vector<char> state(n, kNeither);
    for (int v : a) {
        if (v < 0 || v >= n) throw std::invalid_argument("A contains vertex out of range");
        state[v] = kInA;
    }
    for (int v : b) {
        if (v < 0 || v >= n) throw std::invalid_argument("B contains vertex out of range");
        if (state[v] == kInA) throw std::invalid_argument("A and B overlap at vertex " + std::to_string(v));
        state[v] = kInB;
    }
    return state;
}

std::vector<std::vector<int>> combined_adjacency(const BipartiteGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

int edges_into(const std::vector<int>& nbrs, const std::vector<char>& state, char which) {
    return static_cast<int>(std::count_if(nbrs.begin(), nbrs.end(), [&](int u) { return state[u] == which; }));
}

VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

ComponentClass classify_component(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b,
                                  const DegreeSpec& spec, const VertexSet& d) {
    const auto state = pair_states(g, a, b);
    const auto adj = combined_adjacency(g);
    if (d.empty()) throw std::invalid_argument("component is empty");
    std::vector<char> in_d(g.vertex_count(), 0);
    for (int v : d) {
        if (v < 0 || v >= g.vertex_count() || state[v] != kNeither)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not in G - (A u B)");
        in_d[v] = 1;
    }
    // d must be closed under adjacency in G - (A u B) and connected.
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{d.front()};
    seen[d.front()] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        ++reached;
        for (int u : adj[v]) {
            if (state[u] != kNeither || seen[u]) continue;
            if (!in_d[u]) throw std::invalid_argument("not a component: vertex " + std::to_string(u) + " is adjacent");
            seen[u] = 1;
            queue.push_back(u);
        }
    }
    if (reached != sorted_unique(d).size()) throw std::invalid_argument("not a component: disconnected set");

    int parity = 0;
    for (int v : d) parity += spec.f(g, v) + edges_into(adj[v], state, kInB);
    return parity % 2 ? ComponentClass::odd : ComponentClass::even;
}

Barrier evaluate_pair(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b,
                      const DegreeSpec& spec) {
    const auto state = pair_states(g, a, b);
    const auto adj = combined_adjacency(g);
    const int n = g.vertex_count();

    Barrier out;
    out.a = sorted_unique(a);
    out.b = sorted_unique(b);
    int total = 0;
    for (int v : out.a) total += spec.f(g, v);
    for (int v : out.b) total -= spec.g(g, v);
    for (int v : out.b) total += static_cast<int>(adj[v].size()) - edges_into(adj[v], state, kInA);

    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (state[s] != kNeither || seen[s]) continue;
        ClassifiedComponent comp;
        std::deque<int> queue{s};
        seen[s] = 1;
        int parity = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            comp.vertices.push_back(v);
            parity += spec.f(g, v) + edges_into(adj[v], state, kInB);
            for (int u : adj[v])
                if (state[u] == kNeither && !seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.cls = parity % 2 ? ComponentClass::odd : ComponentClass::even;
        if (comp.cls == ComponentClass::odd) ++out.hw;
        out.components.push_back(std::move(comp));
    }
    out.delta = total - out.hw;
    return out;
}

namespace {

using Mask = std::uint64_t;

VertexSet mask_to_set(Mask m) {
    VertexSet s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
    return s;
}

struct PairKey {
    Mask a = 0;
    Mask b = 0;
    int delta = 0;
};

// Ternary assignment order, vertex 0 least significant, digits neither < A < B.
bool ternary_less(Mask a1, Mask b1, Mask a2, Mask b2) {
    const Mask diff = (a1 ^ a2) | (b1 ^ b2);
    if (!diff) return false;
    const Mask top = Mask{1} << (63 - std::countl_zero(diff));
    const int d1 = (a1 & top) ? 1 : (b1 & top) ? 2 : 0;
    const int d2 = (a2 & top) ? 1 : (b2 & top) ? 2 : 0;
    return d1 < d2;
}

// Equal-size sets: lexicographic order of sorted index sequences.
bool sequence_less(Mask x, Mask y) {
    const Mask diff = x ^ y;
    return diff && (x & diff & -diff);
}

// Three-stage biased order with the lexicographic residual tie-break.
bool biased_less(int delta, Mask a, Mask b, const PairKey& best) {
    if (delta != best.delta) return delta < best.delta;
    const int nb = std::popcount(b), best_nb = std::popcount(best.b);
    if (nb != best_nb) return nb < best_nb;
    const int na = std::popcount(a), best_na = std::popcount(best.a);
    if (na != best_na) return na > best_na;
    if (b != best.b) return sequence_less(b, best.b);
    return sequence_less(a, best.a);
}

struct ScanOutcome {
    ScanStats stats;
    std::optional<PairKey> first;
    std::optional<PairKey> biased;
};

ScanOutcome scan_pairs(const BipartiteGraph& g, const DegreeSpec& spec, const Budget& budget) {
    const int n = g.vertex_count();
    if (n > budget.criterion_vertices || n > 63)
        throw BudgetExceeded("criterion: " + std::to_string(n) +
                             " vertices exceeds the enumeration budget of " +
                             std::to_string(std::min(budget.criterion_vertices, 63)));

    std::vector<Mask> nbr(n, 0);
    std::vector<int> fv(n), gv(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) nbr[v] |= Mask{1} << u;
        fv[v] = spec.f(g, v);
        gv[v] = spec.g(g, v);
    }
    const Mask full = n ? (Mask{1} << n) - 1 : 0;

    ScanOutcome out;
    out.stats.min_delta = std::numeric_limits<int>::max();
    std::vector<Mask> comp;
    std::vector<int> members;
    std::vector<int> u_deg(n);
    std::vector<Mask> par_mask(n);
    comp.reserve(n);
    members.reserve(n);

    for (Mask r = 0;; ++r) {
        const Mask u = full & ~r;
        comp.clear();
        Mask base = 0;  // bit j: f(D_j) is odd
        for (Mask rest = u; rest;) {
            Mask c = rest & -rest;
            for (Mask frontier = c; frontier;) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const Mask fresh = nbr[v] & u & ~c;
                c |= fresh;
                frontier |= fresh;
            }
            int fsum = 0;
            for (Mask m = c; m; m &= m - 1) fsum += fv[std::countr_zero(m)];
            if (fsum & 1) base |= Mask{1} << comp.size();
            comp.push_back(c);
            rest &= ~c;
        }

        members.clear();
        int sum_f_a = 0;
        for (Mask m = r; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            members.push_back(v);
            sum_f_a += fv[v];
            u_deg[v] = std::popcount(nbr[v] & u);
            Mask pm = 0;
            for (std::size_t j = 0; j < comp.size(); ++j)
                if (std::popcount(nbr[v] & comp[j]) & 1) pm |= Mask{1} << j;
            par_mask[v] = pm;
        }

        // Gray-code walk over B subset of R, starting at B = {}, A = R.
        Mask b = 0;
        int sum_g_b = 0, d_sum = 0;
        Mask parity = base;
        const std::uint64_t splits = std::uint64_t{1} << members.size();
        for (std::uint64_t i = 0;; ++i) {
            if (i) {
                const int v = members[std::countr_zero(i)];
                const Mask bit = Mask{1} << v;
                if (b & bit) {
                    b &= ~bit;
                    sum_f_a += fv[v];
                    sum_g_b -= gv[v];
                    d_sum -= u_deg[v] + 2 * std::popcount(nbr[v] & b);
                } else {
                    d_sum += u_deg[v] + 2 * std::popcount(nbr[v] & b);
                    b |= bit;
                    sum_f_a -= fv[v];
                    sum_g_b += gv[v];
                }
                parity ^= par_mask[v];
            }
            const int d = sum_f_a - sum_g_b + d_sum - std::popcount(parity);
            ++out.stats.evaluated;
            if (d & 1) ++out.stats.odd_deltas;
            if (d < out.stats.min_delta) out.stats.min_delta = d;
            if (d < 0) {
                const Mask a = r & ~b;
                if (!out.first || ternary_less(a, b, out.first->a, out.first->b)) out.first = PairKey{a, b, d};
                if (!out.biased || biased_less(d, a, b, *out.biased)) out.biased = PairKey{a, b, d};
            }
            if (i + 1 == splits) break;
        }
        if (r == full) break;
    }
    return out;
}

Barrier materialize(const BipartiteGraph& g, const DegreeSpec& spec, const PairKey& key) {
    Barrier bar = evaluate_pair(g, mask_to_set(key.a), mask_to_set(key.b), spec);
    if (bar.delta != key.delta)
        throw std::logic_error("scan kernel and direct evaluation disagree on delta");
    return bar;
}

}  // namespace

CriterionAnalysis analyze_criterion(const BipartiteGraph& g, const DegreeSpec& spec, const Budget& budget) {
    const auto scan = scan_pairs(g, spec, budget);
    CriterionAnalysis out;
    out.criterion.stats = scan.stats;
    out.criterion.exists = !scan.first.has_value();
    if (scan.first) out.criterion.barrier = materialize(g, spec, *scan.first);
    if (scan.biased) out.biased = materialize(g, spec, *scan.biased);
    return out;
}

CriterionResult decide_by_criterion(const BipartiteGraph& g, const DegreeSpec& spec, const Budget& budget) {
    return analyze_criterion(g, spec, budget).criterion;
}

Barrier find_biased_barrier(const BipartiteGraph& g, const DegreeSpec& spec, const Budget& budget) {
    auto analysis = analyze_criterion(g, spec, budget);
    if (!analysis.biased) throw std::runtime_error("graph has a (2,k)-factor");
    return std::move(*analysis.biased);
}

int h_of_z(const BipartiteGraph& g, const Barrier& barrier, const VertexSet& z) {
    const int n = g.vertex_count();
    std::vector<char> in_nz(n, 0);
    for (int v : z) {
        if (v < 0 || v >= n || !g.is_x(v) || !std::binary_search(barrier.a.begin(), barrier.a.end(), v))
            throw std::invalid_argument("Z is not a subset of A n X (vertex " + std::to_string(v) + ")");
        for (int u : g.neighbors(v)) in_nz[u] = 1;
    }
    int count = 0;
    for (int v : barrier.b) count += in_nz[v];
    for (const auto& comp : barrier.components) {
        if (comp.cls != ComponentClass::odd) continue;
        if (std::any_of(comp.vertices.begin(), comp.vertices.end(), [&](int v) { return in_nz[v]; })) ++count;
    }
    return count;
}

namespace {

std::string z_text(const VertexSet& z, int h) {
    return "Z=" + format_set(z) + " has h(Z)=" + std::to_string(h) + " < " + std::to_string(2 * z.size());
}

}  // namespace

StructureReport check_barrier_structure(const BipartiteGraph& g, const Barrier& biased,
                                        const DegreeSpec& spec, const Budget& budget) {
    if (!spec.even_total(g)) throw std::invalid_argument("k|Y| is odd; structure theorem does not apply");
    const Barrier bar = evaluate_pair(g, biased.a, biased.b, spec);
    const int n = g.vertex_count();
    std::vector<char> in_b(n, 0);
    for (int v : bar.b) in_b[v] = 1;

    StructureReport rep;
    for (int v : bar.b) {
        if (g.is_x(v)) {
            rep.b_inside_y = {false, "X-vertex " + std::to_string(v) + " lies in B"};
            break;
        }
    }

    auto e_to_b = [&](int v) {
        int c = 0;
        for (int u : g.neighbors(v)) c += in_b[u];
        return c;
    };
    for (std::size_t j = 0; j < bar.components.size(); ++j) {
        const auto& comp = bar.components[j];
        for (int v : comp.vertices) {
            const int e = e_to_b(v);
            if (comp.cls == ComponentClass::odd && e > 1 && rep.odd_touch_at_most_one.pass)
                rep.odd_touch_at_most_one = {false, "vertex " + std::to_string(v) + " in odd component " +
                                                        std::to_string(j) + " has e(v,B)=" + std::to_string(e)};
            if (comp.cls == ComponentClass::even && e > 0 && rep.even_untouched.pass)
                rep.even_untouched = {false, "vertex " + std::to_string(v) + " in even component " +
                                                 std::to_string(j) + " has e(v,B)=" + std::to_string(e)};
        }
    }

    // Candidates for Z: X-vertices of A with no neighbour in B.
    VertexSet candidates;
    for (int v : bar.a)
        if (g.is_x(v) && e_to_b(v) == 0) candidates.push_back(v);
    if (candidates.empty()) return rep;

    std::vector<int> odd_index(n, -1);
    int odd_count = 0;
    for (const auto& comp : bar.components) {
        if (comp.cls != ComponentClass::odd) continue;
        for (int v : comp.vertices) odd_index[v] = odd_count;
        ++odd_count;
    }
    const std::size_t words = (static_cast<std::size_t>(odd_count) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> touch(candidates.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (int u : g.neighbors(candidates[i]))
            if (odd_index[u] >= 0) touch[i][odd_index[u] / 64] |= std::uint64_t{1} << (odd_index[u] % 64);

    auto check = [&](const std::vector<std::size_t>& pick) {
        std::vector<std::uint64_t> acc(words, 0);
        for (std::size_t i : pick)
            for (std::size_t w = 0; w < words; ++w) acc[w] |= touch[i][w];
        int h = 0;
        for (auto w : acc) h += std::popcount(w);
        if (h < 2 * static_cast<int>(pick.size())) {
            VertexSet z;
            for (std::size_t i : pick) z.push_back(candidates[i]);
            rep.z_expansion = {false, z_text(z, h)};
            return false;
        }
        return true;
    };

    const std::size_t q = candidates.size();
    if (static_cast<int>(q) <= std::min(budget.structure_subset, 62)) {
        std::vector<std::size_t> pick;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << q); ++m) {
            pick.clear();
            for (std::uint64_t r = m; r; r &= r - 1) pick.push_back(std::countr_zero(r));
            if (!check(pick)) break;
        }
    } else {
        rep.z_truncated = true;
        bool ok = true;
        for (std::size_t i = 0; i < q && ok; ++i) {
            ok = check({i});
            for (std::size_t j = i + 1; j < q && ok; ++j) ok = check({i, j});
        }
    }
    return rep;
}

}  // namespace berge
