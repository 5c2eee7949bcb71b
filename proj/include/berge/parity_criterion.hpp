// parity_criterion.hpp
// Partial parity (g,f)-factor criterion specialised to (2,k)-factors of a
// bipartite graph: f = 2, g = 0 on X (the parity set W), f = g = k on Y.
//
// Vertex sets here use the combined index space of BipartiteGraph
// (X first, then Y).

#pragma once

#include "berge/common.hpp"
#include "berge/incidence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berge {

/// Degree bounds for (2,k)-factors. Only k in [1, 8] is accepted.
struct DegreeSpec {
    int k = 1;

    explicit DegreeSpec(int k_);

    int f(const BipartiteGraph& g, int v) const { return g.is_x(v) ? 2 : k; }
    int g(const BipartiteGraph& gr, int v) const { return gr.is_x(v) ? 0 : k; }
    /// k|Y| even: the parity condition under which every deficiency is even.
    bool even_total(const BipartiteGraph& gr) const { return (k * gr.y_count()) % 2 == 0; }
};

enum class ComponentClass { even, odd };

struct ClassifiedComponent {
    VertexSet vertices;
    ComponentClass cls = ComponentClass::even;

    friend bool operator==(const ClassifiedComponent&, const ClassifiedComponent&) = default;
};

/// Disjoint (A, B) with its deficiency and the classified components of
/// G - (A u B). A barrier proper has delta < 0.
struct Barrier {
    VertexSet a;
    VertexSet b;
    int delta = 0;
    std::vector<ClassifiedComponent> components;
    int hw = 0;  // number of odd components

    bool is_barrier() const { return delta < 0; }
    friend bool operator==(const Barrier&, const Barrier&) = default;
};

/// Parity class of component d of G - (A u B). Throws std::invalid_argument
/// if d is not such a component.
ComponentClass classify_component(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b,
                                  const DegreeSpec& spec, const VertexSet& d);

/// Evaluates the deficiency of (A, B) from scratch and returns the populated
/// record. Throws std::invalid_argument when A and B overlap.
Barrier evaluate_pair(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b,
                      const DegreeSpec& spec);

inline int delta(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b,
                 const DegreeSpec& spec) {
    return evaluate_pair(g, a, b, spec).delta;
}

/// Counters from one exhaustive scan over all disjoint pairs.
struct ScanStats {
    std::uint64_t evaluated = 0;
    std::uint64_t odd_deltas = 0;  // deficiencies that were odd
    int min_delta = 0;
};

struct CriterionResult {
    bool exists = true;
    std::optional<Barrier> barrier;  // first barrier in ternary order
    ScanStats stats;
};

/// Full scan of all 3^|V| disjoint pairs. `exists` iff every deficiency is
/// non-negative; otherwise reports the barrier whose ternary assignment
/// (vertex 0 least significant; 0 = neither, 1 = A, 2 = B) is smallest.
/// Throws BudgetExceeded when |V| > budget.criterion_vertices.
CriterionResult decide_by_criterion(const BipartiteGraph& g, const DegreeSpec& spec,
                                    const Budget& budget = {});

/// Barrier minimising delta, then |B|, then maximising |A|, then least
/// (B, A) as sorted index sequences. Throws std::runtime_error
/// ("graph has a (2,k)-factor") when no barrier exists.
Barrier find_biased_barrier(const BipartiteGraph& g, const DegreeSpec& spec,
                            const Budget& budget = {});

/// Both answers from a single scan.
struct CriterionAnalysis {
    CriterionResult criterion;
    std::optional<Barrier> biased;
};
CriterionAnalysis analyze_criterion(const BipartiteGraph& g, const DegreeSpec& spec,
                                    const Budget& budget = {});

/// |N(Z) n B| plus the number of odd components meeting N(Z), for
/// Z a subset of A n X. Throws std::invalid_argument otherwise.
int h_of_z(const BipartiteGraph& g, const Barrier& barrier, const VertexSet& z);

struct ClauseResult {
    bool pass = true;
    std::string witness;  // counterexample when !pass
};

struct StructureReport {
    ClauseResult b_inside_y;         // B is a subset of Y
    ClauseResult odd_touch_at_most_one;   // e(v,B) <= 1 on odd components
    ClauseResult even_untouched;     // e(v,B) = 0 on even components
    ClauseResult z_expansion;        // h(Z) >= 2|Z| where N(Z) n B is empty
    bool z_truncated = false;        // only |Z| <= 2 checked

    bool all_pass() const {
        return b_inside_y.pass && odd_touch_at_most_one.pass && even_untouched.pass && z_expansion.pass;
    }
};

/// Evaluates the four structural properties of a biased barrier. Throws
/// std::invalid_argument when k|Y| is odd.
StructureReport check_barrier_structure(const BipartiteGraph& g, const Barrier& biased,
                                        const DegreeSpec& spec, const Budget& budget = {});

}  // namespace berge
