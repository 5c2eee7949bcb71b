// factor_solver.cpp

#include "berge/factor_solver.hpp"

#include <algorithm>
#include <sstream>

namespace berge {

GadgetBuild build_gadget(const BipartiteGraph& g, const DegreeSpec& spec) {
    if (g.has_isolated_x()) throw std::invalid_argument("build_gadget: isolated X-vertex");
    const int n = g.vertex_count();
    GadgetBuild out;
    for (int y = 0; y < g.y_count(); ++y) {
        if (static_cast<int>(g.y_neighbors(y).size()) < spec.k) {
            out.deficient_y = y;
            return out;
        }
    }

    GadgetGraph gad;
    gad.host_edges = g.edge_list();
    std::vector<std::vector<int>> incident(n);  // host vertex -> host edge ids
    for (std::size_t e = 0; e < gad.host_edges.size(); ++e) {
        incident[gad.host_edges[e].first].push_back(static_cast<int>(e));
        incident[g.y_vertex(gad.host_edges[e].second)].push_back(static_cast<int>(e));
    }

    gad.lower.resize(n);
    gad.upper.resize(n);
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> outer_of(gad.host_edges.size(), {-1, -1});
    for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(incident[v].size());
        int lo = spec.g(g, v), hi = spec.f(g, v);
        if (g.is_x(v) && d < 2) hi = 0;
        gad.lower[v] = lo;
        gad.upper[v] = hi;

        const int first_outer = static_cast<int>(gad.vertices.size());
        for (int e : incident[v]) {
            (g.is_x(v) ? outer_of[e].first : outer_of[e].second) = static_cast<int>(gad.vertices.size());
            gad.vertices.push_back({v, GadgetRole::outer, e});
        }
        const int last_outer = static_cast<int>(gad.vertices.size());
        for (int c = 0; c < d - hi; ++c) {
            const int id = static_cast<int>(gad.vertices.size());
            gad.vertices.push_back({v, GadgetRole::core, -1});
            for (int o = first_outer; o < last_outer; ++o) edges.emplace_back(o, id);
        }
        for (int s = 0; s < (hi - lo) / 2; ++s) {
            const int p = static_cast<int>(gad.vertices.size());
            gad.vertices.push_back({v, GadgetRole::slack_p, -1});
            gad.vertices.push_back({v, GadgetRole::slack_q, -1});
            edges.emplace_back(p, p + 1);
            for (int o = first_outer; o < last_outer; ++o) {
                edges.emplace_back(o, p);
                edges.emplace_back(o, p + 1);
            }
        }
    }
    for (const auto& [ox, oy] : outer_of) {
        gad.cross.emplace_back(std::min(ox, oy), std::max(ox, oy));
        edges.push_back(gad.cross.back());
    }
    gad.graph = GeneralGraph(static_cast<int>(gad.vertices.size()), std::move(edges));
    out.gadget = std::move(gad);
    return out;
}

std::string SolverTrace::str() const {
    std::ostringstream os;
    if (deficient_y >= 0) {
        os << "gadget: skipped (y" << deficient_y << " has degree below k)\n";
        return os.str();
    }
    os << "gadget vertices: " << gadget_vertices << "\n"
       << "gadget edges: " << gadget_edges << "\n"
       << "matching size: " << matching_size << "\n"
       << "perfect: " << (2 * matching_size == gadget_vertices ? "yes" : "no") << "\n"
       << "chosen host edges: " << chosen_edges << "\n";
    if (cross_checked) os << "criterion cross-check: agree\n";
    return os.str();
}

std::optional<FactorSubgraph> find_2k_factor(const BipartiteGraph& g, const DegreeSpec& spec,
                                             const SolveOptions& options, SolverTrace* trace) {
    SolverTrace local;
    SolverTrace& tr = trace ? *trace : local;
    tr = SolverTrace{};

    std::optional<FactorSubgraph> result;
    const auto build = build_gadget(g, spec);
    if (build.infeasible()) {
        tr.deficient_y = build.deficient_y;
    } else {
        const auto& gad = *build.gadget;
        const Matching m = max_matching(gad.graph);
        tr.gadget_vertices = gad.graph.vertex_count();
        tr.gadget_edges = static_cast<int>(gad.graph.edges().size());
        tr.matching_size = static_cast<int>(m.size());
        if (is_perfect(gad.graph, m)) {
            const auto mate = mates(gad.graph, m);
            FactorSubgraph f;
            f.k = spec.k;
            std::vector<int> across(g.vertex_count(), 0);
            for (std::size_t e = 0; e < gad.cross.size(); ++e) {
                const auto [a, b] = gad.cross[e];
                if (mate[a] != b) continue;
                f.chosen.push_back(gad.host_edges[e]);
                ++across[gad.host_edges[e].first];
                ++across[g.y_vertex(gad.host_edges[e].second)];
            }
            for (int v = 0; v < g.vertex_count(); ++v) {
                const int c = across[v];
                if (c < gad.lower[v] || c > gad.upper[v] || (c - gad.lower[v]) % 2)
                    throw std::logic_error("gadget parity law violated at host vertex " + std::to_string(v));
            }
            tr.chosen_edges = static_cast<int>(f.chosen.size());
            result = std::move(f);
        }
    }

    if (options.cross_check) {
        const auto crit = decide_by_criterion(g, spec, options.budget);
        if (crit.exists != result.has_value())
            throw std::logic_error("factor solver and parity criterion disagree");
        tr.cross_checked = true;
    }
    return result;
}

Verdict verify_2k_factor(const BipartiteGraph& g, const DegreeSpec& spec, const FactorSubgraph& f) {
    if (f.k != spec.k)
        return Verdict::reject("factor records k=" + std::to_string(f.k) + ", expected " + std::to_string(spec.k));
    std::vector<int> dx(g.x_count(), 0), dy(g.y_count(), 0);
    auto sorted = f.chosen;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto [x, y] = sorted[i];
        if (x < 0 || x >= g.x_count() || y < 0 || y >= g.y_count())
            return Verdict::reject("malformed: pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
        if (i && sorted[i - 1] == sorted[i])
            return Verdict::reject("malformed: pair (" + std::to_string(x) + "," + std::to_string(y) + ") repeated");
        const auto& row = g.x_neighbors(x);
        if (!std::binary_search(row.begin(), row.end(), y))
            return Verdict::reject("pair (" + std::to_string(x) + "," + std::to_string(y) + ") is not a host edge");
        ++dx[x];
        ++dy[y];
    }
    for (int x = 0; x < g.x_count(); ++x)
        if (dx[x] != 0 && dx[x] != 2)
            return Verdict::reject("x" + std::to_string(x) + " has degree " + std::to_string(dx[x]) + ", expected 0 or 2");
    for (int y = 0; y < g.y_count(); ++y)
        if (dy[y] != spec.k)
            return Verdict::reject("y" + std::to_string(y) + " has degree " + std::to_string(dy[y]) + ", expected " +
                                   std::to_string(spec.k));
    return Verdict::accept();
}

BergeFactorCertificate lift_to_berge(const Hypergraph& h, const FactorSubgraph& f) {
    const auto g = incidence_graph(h);
    if (const auto v = verify_2k_factor(g, DegreeSpec(f.k), f); !v)
        throw std::invalid_argument("lift_to_berge: factor does not verify: " + v.reason);
    std::vector<std::vector<int>> picked(h.edge_count());
    for (const auto& [x, y] : f.chosen) picked[x].push_back(y);
    BergeFactorCertificate cert;
    cert.k = f.k;
    for (int x = 0; x < h.edge_count(); ++x) {
        if (picked[x].empty()) continue;
        std::sort(picked[x].begin(), picked[x].end());
        cert.pairs.push_back({x, picked[x][0], picked[x][1]});
    }
    return cert;
}

}  // namespace berge
