// factor_solver.hpp
// Constructive (2,k)-factor search: degree-interval gadget reduction to
// perfect matching, factor verification, and the lift to a Berge-k-factor.

#pragma once

#include "berge/common.hpp"
#include "berge/hypergraph.hpp"
#include "berge/incidence.hpp"
#include "berge/matching.hpp"
#include "berge/parity_criterion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace berge {

enum class GadgetRole { outer, core, slack_p, slack_q };

struct GadgetVertex {
    int host = 0;        // combined index in the host bipartite graph
    GadgetRole role = GadgetRole::core;
    int host_edge = -1;  // for outer vertices: index into host edge_list()
};

/// Per host vertex v of degree d with bounds (lo, hi): d outer vertices,
/// d - hi core vertices joined to every outer, (hi - lo) / 2 slack pairs
/// joined to each other and to every outer. Each host edge becomes one
/// edge between its two outer vertices.
struct GadgetGraph {
    GeneralGraph graph;
    std::vector<GadgetVertex> vertices;
    std::vector<std::pair<int, int>> host_edges;  // host edge -> (x, y)
    std::vector<Edge> cross;                      // host edge -> gadget edge
    std::vector<int> lower, upper;                // effective bounds per host vertex
};

struct GadgetBuild {
    std::optional<GadgetGraph> gadget;
    int deficient_y = -1;  // set when some y has degree < k
    bool infeasible() const { return !gadget.has_value(); }
};

/// Effective bounds: X-vertices (0,2), or (0,0) when of degree 1;
/// Y-vertices (k,k). A Y-vertex of degree below k short-circuits to the
/// infeasible marker. Throws std::invalid_argument on an isolated X-vertex.
GadgetBuild build_gadget(const BipartiteGraph& g, const DegreeSpec& spec);

struct SolverTrace {
    int gadget_vertices = 0;
    int gadget_edges = 0;
    int matching_size = 0;
    int deficient_y = -1;
    int chosen_edges = 0;
    bool cross_checked = false;

    std::string str() const;
};

struct SolveOptions {
    /// Re-derive the answer with decide_by_criterion and throw
    /// std::logic_error on disagreement (requires the criterion budget).
    bool cross_check = false;
    Budget budget;
};

/// A (2,k)-factor of g, or nullopt when none exists.
std::optional<FactorSubgraph> find_2k_factor(const BipartiteGraph& g, const DegreeSpec& spec,
                                             const SolveOptions& options = {},
                                             SolverTrace* trace = nullptr);

Verdict verify_2k_factor(const BipartiteGraph& g, const DegreeSpec& spec, const FactorSubgraph& f);

/// Converts a verified factor of I(h) into a Berge-k-factor certificate.
/// Throws std::invalid_argument if f does not verify on incidence_graph(h).
BergeFactorCertificate lift_to_berge(const Hypergraph& h, const FactorSubgraph& f);

}  // namespace berge
