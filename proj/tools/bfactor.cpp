// bfactor.cpp
// Command-line front end.
//
// Exit codes: 0 success/pass, 1 property fails or violation found,
// 2 usage or format error, 3 enumeration budget exceeded.

#include "berge/experiments.hpp"
#include "berge/factor_solver.hpp"
#include "berge/formats.hpp"
#include "berge/hypergraph.hpp"
#include "berge/incidence.hpp"
#include "berge/parity_criterion.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace berge;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Hypergraph load_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

// .big files are read directly; anything else is taken as a hypergraph.
BipartiteGraph load_bipartite(const std::string& path) {
    if (ends_with(path, ".big")) return parse_bipartite(read_file(path));
    return incidence_graph(load_hypergraph(path));
}

void print_stats(const ScanStats& s) {
    std::cout << "pairs evaluated: " << s.evaluated << "\n"
              << "minimum delta: " << s.min_delta << "\n";
}

struct Options {
    std::string file, second, output, verify_bar, limits;
    int k = 1;
    bool biased = false, check_structure = false, trace = false, cross_check = false;
    bool porcelain = false, audit = false;
    int n_min = 1, n_max = 4, trials = 0, m_max = -1, size_lo = 2;
    std::uint64_t seed = 1, budget = 0;
};

int run_toughness(const Options& o, const Budget& b) {
    const auto t = toughness(load_hypergraph(o.file), b);
    std::cout << t.str() << "\n";
    if (!t.infinite) std::cout << "witness " << format_set(t.witness) << "\ncomponents " << t.components << "\n";
    return kOk;
}

int run_y_toughness(const Options& o, const Budget& b) {
    const auto t = y_toughness(load_bipartite(o.file), b);
    std::cout << t.str() << "\n";
    if (!t.infinite) std::cout << "witness " << format_set(t.witness) << "\ncomponents " << t.components << "\n";
    return kOk;
}

int run_incidence(const Options& o) {
    std::cout << serialize_bipartite(incidence_graph(load_hypergraph(o.file)));
    return kOk;
}

int run_criterion(const Options& o, const Budget& b) {
    const auto g = load_bipartite(o.file);
    const auto r = decide_by_criterion(g, DegreeSpec(o.k), b);
    print_stats(r.stats);
    if (r.exists) {
        std::cout << "exists: every deficiency is non-negative\n";
        return kOk;
    }
    std::cout << "barrier (delta=" << r.barrier->delta << "):\n" << serialize_barrier(*r.barrier);
    return kFail;
}

int run_barrier(const Options& o, const Budget& b) {
    const auto g = load_bipartite(o.file);
    const DegreeSpec spec(o.k);
    if (!o.verify_bar.empty()) {
        const Barrier claimed = parse_barrier(read_file(o.verify_bar));
        const Barrier actual = evaluate_pair(g, claimed.a, claimed.b, spec);
        if (!(actual == claimed)) {
            std::cout << "mismatch: recomputed record is\n" << serialize_barrier(actual);
            return kFail;
        }
        std::cout << (actual.is_barrier() ? "valid barrier" : "record matches but delta >= 0") << "\n";
        return actual.is_barrier() ? kOk : kFail;
    }
    const auto analysis = analyze_criterion(g, spec, b);
    if (analysis.criterion.exists) {
        std::cout << "no barrier: the graph has a (2," << o.k << ")-factor\n";
        return kFail;
    }
    const Barrier& bar = o.biased ? *analysis.biased : *analysis.criterion.barrier;
    const std::string text = serialize_barrier(bar);
    if (!o.output.empty()) write_file(o.output, text);
    std::cout << text;
    if (!o.check_structure) return kOk;
    const auto rep = check_barrier_structure(g, bar, spec, b);
    auto line = [](const char* name, const ClauseResult& c) {
        std::cout << name << ": " << (c.pass ? "pass" : "fail " + c.witness) << "\n";
    };
    line("B inside Y", rep.b_inside_y);
    line("odd components touch B at most once per vertex", rep.odd_touch_at_most_one);
    line("even components untouched by B", rep.even_untouched);
    line("h(Z) >= 2|Z|", rep.z_expansion);
    if (rep.z_truncated) std::cout << "note: Z restricted to sizes 1 and 2\n";
    return rep.all_pass() ? kOk : kFail;
}

int run_factor(const Options& o, const Budget& b) {
    const auto h = load_hypergraph(o.file);
    const auto g = incidence_graph(h);
    const DegreeSpec spec(o.k);
    SolveOptions so;
    so.cross_check = o.cross_check;
    so.budget = b;
    SolverTrace trace;
    const auto f = find_2k_factor(g, spec, so, &trace);
    if (o.trace) std::cout << trace.str();
    if (f) {
        const auto cert = lift_to_berge(h, *f);
        const std::string text = serialize_certificate(cert);
        if (!o.output.empty()) write_file(o.output, text);
        std::cout << text;
        return kOk;
    }
    std::cout << "no Berge-" << o.k << "-factor\n";
    if (g.vertex_count() <= b.criterion_vertices) {
        const auto bar = find_biased_barrier(g, spec, b);
        std::cout << "barrier delta=" << bar.delta << "\n" << serialize_barrier(bar);
    }
    return kFail;
}

int run_verify(const Options& o) {
    const auto h = load_hypergraph(o.file);
    const auto cert = parse_certificate(read_file(o.second));
    const auto v = verify_berge_factor(h, cert);
    std::cout << (v ? "accept" : "reject: " + v.reason) << "\n";
    return v ? kOk : kFail;
}

int run_theorem(const Options& o, const Budget& b) {
    TheoremConfig cfg;
    cfg.k = o.k;
    cfg.n_lo = o.n_min;
    cfg.n_hi = o.n_max;
    cfg.mode = o.trials > 0 ? TheoremMode::random : TheoremMode::exhaustive;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.m_max = o.m_max >= 0 ? o.m_max : (o.trials > 0 ? 8 : 6);
    cfg.size_lo = o.size_lo;
    cfg.audit = o.audit;
    cfg.budget = b;
    const auto rep = verify_theorem(cfg);
    std::cout << (o.porcelain ? rep.porcelain() : rep.text());
    return rep.passed() ? kOk : kFail;
}

int run_tightness(const Options& o, const Budget& b) {
    TightnessConfig cfg;
    cfg.k = o.k;
    cfg.budget = o.budget;
    cfg.n_max = o.n_max;
    cfg.seed = o.seed;
    cfg.limits = b;
    const auto res = tightness_search(cfg);
    std::cout << (o.porcelain ? res.porcelain() : res.text());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph toughness and Berge-factor toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--limits", o.limits,
                   "enumeration limits, e.g. 24 or toughness=22,criterion=16 (overrides BF_BUDGET)");

    auto* c_tough = app.add_subcommand("toughness", "exact toughness of a hypergraph (.hg)");
    c_tough->add_option("file", o.file)->required();

    auto* c_ytough = app.add_subcommand("y-toughness", "Y-toughness of a bipartite graph (.big or .hg)");
    c_ytough->add_option("file", o.file)->required();

    auto* c_inc = app.add_subcommand("incidence", "print the incidence graph of a hypergraph as .big");
    c_inc->add_option("file", o.file)->required();

    auto* c_crit = app.add_subcommand("criterion", "decide (2,k)-factor existence by exhaustive deficiency scan");
    c_crit->add_option("file", o.file)->required();
    c_crit->add_option("-k", o.k)->required();

    auto* c_bar = app.add_subcommand("barrier", "emit a barrier certificate (.bar)");
    c_bar->add_option("file", o.file)->required();
    c_bar->add_option("-k", o.k)->required();
    c_bar->add_flag("--biased", o.biased, "emit the biased barrier");
    c_bar->add_flag("--check-structure", o.check_structure, "check the structure of the emitted barrier");
    c_bar->add_option("--verify", o.verify_bar, "re-verify a .bar file instead of searching");
    c_bar->add_option("-o", o.output, "also write the barrier to this file");

    auto* c_fac = app.add_subcommand("factor", "find a Berge-k-factor of a hypergraph");
    c_fac->add_option("file", o.file)->required();
    c_fac->add_option("-k", o.k)->required();
    c_fac->add_option("-o", o.output, "write the certificate (.bkf) here");
    c_fac->add_flag("--trace", o.trace, "print solver statistics");
    c_fac->add_flag("--cross-check", o.cross_check, "confirm the answer with the criterion scan");

    auto* c_ver = app.add_subcommand("verify", "check a Berge-factor certificate against a hypergraph");
    c_ver->add_option("file", o.file)->required();
    c_ver->add_option("cert", o.second)->required();

    auto* c_thm = app.add_subcommand("theorem", "verify: k-tough => Berge-k-factor, exhaustively or at random");
    c_thm->add_option("-k", o.k)->required();
    c_thm->add_option("--n-max", o.n_max)->required();
    c_thm->add_option("--n-min", o.n_min);
    c_thm->add_option("--trials", o.trials, "random mode with this many instances");
    c_thm->add_option("--seed", o.seed);
    c_thm->add_option("--m-max", o.m_max, "edge bound (default 6 exhaustive, 8 random)");
    c_thm->add_option("--size-min", o.size_lo, "smallest edge size (default 2)");
    c_thm->add_flag("--audit", o.audit, "also run the criterion and barrier-structure checks");
    c_thm->add_flag("--porcelain", o.porcelain, "key=value output");

    auto* c_tight = app.add_subcommand("tightness", "search for tough instances without a Berge-k-factor");
    c_tight->add_option("-k", o.k)->required();
    c_tight->add_option("--budget", o.budget, "number of instances to examine")->required();
    c_tight->add_option("--n-max", o.n_max)->default_val(6);
    c_tight->add_option("--seed", o.seed);
    c_tight->add_flag("--porcelain", o.porcelain, "key=value output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const Budget b = o.limits.empty() ? Budget::from_environment() : Budget::parse(o.limits);
        if (c_tough->parsed()) return run_toughness(o, b);
        if (c_ytough->parsed()) return run_y_toughness(o, b);
        if (c_inc->parsed()) return run_incidence(o);
        if (c_crit->parsed()) return run_criterion(o, b);
        if (c_bar->parsed()) return run_barrier(o, b);
        if (c_fac->parsed()) return run_factor(o, b);
        if (c_ver->parsed()) return run_verify(o);
        if (c_thm->parsed()) return run_theorem(o, b);
        if (c_tight->parsed()) return run_tightness(o, b);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
