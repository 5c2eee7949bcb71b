// experiments.cpp

#include "berge/experiments.hpp"

#include "berge/factor_solver.hpp"
#include "berge/formats.hpp"
#include "berge/generators.hpp"
#include "berge/incidence.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace berge {

bool theorem_gate(int n, int k) { return (k * n) % 2 == 0 && n >= k + 1; }

namespace {

constexpr int kExhaustiveMaxN = 5;
constexpr int kRandomMaxN = 10;

class TheoremRun {
public:
    TheoremRun(const TheoremConfig& cfg, TheoremReport& rep) : cfg_(cfg), rep_(rep), spec_(cfg.k) {}

    void process(std::uint64_t key, const Hypergraph& h) {
        ++rep_.total;
        if (!theorem_gate(h.vertex_count(), cfg_.k)) {
            ++rep_.gated_out;
            return;
        }
        const ToughnessValue tau = toughness(h, cfg_.budget);
        const BipartiteGraph g = incidence_graph(h);
        const auto factor = find_2k_factor(g, spec_);
        if (factor) {
            const auto cert = lift_to_berge(h, *factor);
            if (verify_berge_factor(h, cert)) ++rep_.certificates_verified;
            else ++rep_.certificate_failures;
        }
        if (tau.at_least(Rational(cfg_.k, 1))) {
            ++rep_.hypothesis;
            if (factor) {
                ++rep_.factors_found;
            } else {
                ViolationRecord v{key, h, tau, std::nullopt};
                if (g.vertex_count() <= cfg_.budget.criterion_vertices)
                    v.barrier = decide_by_criterion(g, spec_, cfg_.budget).barrier;
                rep_.violations.push_back(std::move(v));
            }
        } else {
            ++rep_.below_toughness;
            if (factor) ++rep_.below_with_factor;
        }
        if (cfg_.audit) audit(key, h, g, factor.has_value());
    }

private:
    void audit(std::uint64_t key, const Hypergraph& h, const BipartiteGraph& g, bool has_factor) {
        if (g.vertex_count() > cfg_.budget.criterion_vertices) {
            ++rep_.criterion_skipped;
            return;
        }
        const auto analysis = analyze_criterion(g, spec_, cfg_.budget);
        ++rep_.criterion_runs;
        rep_.deltas_evaluated += analysis.criterion.stats.evaluated;
        if (spec_.even_total(g)) rep_.odd_deltas += analysis.criterion.stats.odd_deltas;
        if (analysis.criterion.exists != has_factor) {
            ++rep_.criterion_disagreements;
            rep_.audit_failures.push_back({key, h, "criterion and solver disagree"});
        }
        if (!analysis.criterion.exists && spec_.even_total(g)) {
            const auto report = check_barrier_structure(g, *analysis.biased, spec_, cfg_.budget);
            ++rep_.structure_checks;
            if (!report.all_pass()) {
                ++rep_.structure_failures;
                std::string why = "biased barrier structure:";
                for (const auto* c : {&report.b_inside_y, &report.odd_touch_at_most_one, &report.even_untouched,
                                      &report.z_expansion})
                    if (!c->pass) why += " " + c->witness + ";";
                rep_.audit_failures.push_back({key, h, why});
            }
        }
    }

    const TheoremConfig& cfg_;
    TheoremReport& rep_;
    DegreeSpec spec_;
};

}  // namespace

TheoremReport verify_theorem(const TheoremConfig& cfg) {
    if (cfg.n_lo < 1 || cfg.n_lo > cfg.n_hi) throw std::invalid_argument("theorem: bad vertex range");
    const bool random = cfg.mode == TheoremMode::random;
    const int cap = random ? kRandomMaxN : kExhaustiveMaxN;
    if (cfg.n_hi > cap)
        throw BudgetExceeded("theorem: n up to " + std::to_string(cfg.n_hi) + " exceeds the " +
                             (random ? "random" : "exhaustive") + " budget of " + std::to_string(cap));
    if (cfg.m_max < 0 || (random && cfg.m_max < 1)) throw std::invalid_argument("theorem: bad edge bound");
    if (cfg.size_lo < 1) throw std::invalid_argument("theorem: bad edge-size bound");

    const auto start = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.k = cfg.k;
    rep.seed = cfg.seed;
    rep.random = random;
    TheoremRun run(cfg, rep);

    if (!random) {
        std::uint64_t key = 0;
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
            const int hi = cfg.size_hi > 0 ? std::min(cfg.size_hi, n) : n;
            enumerate_hypergraphs(n, cfg.size_lo, hi, cfg.m_max, [&](const Hypergraph& h) {
                run.process(key++, h);
                return true;
            });
        }
    } else {
        for (int t = 0; t < cfg.trials; ++t) {
            std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
            GenParams p;
            p.n = uniform_int(rng, cfg.n_lo, cfg.n_hi);
            p.m = uniform_int(rng, 1, cfg.m_max);
            p.size_lo = std::min(cfg.size_lo, p.n);
            p.size_hi = cfg.size_hi > 0 ? std::clamp(cfg.size_hi, p.size_lo, p.n) : p.n;
            p.seed = rng();
            run.process(static_cast<std::uint64_t>(t), gen_random_hypergraph(p));
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string TheoremReport::text() const {
    std::ostringstream os;
    auto row = [&](const char* label, auto value) { os << std::left << std::setw(26) << label << value << "\n"; };
    row("k", k);
    row("mode", random ? "random" : "exhaustive");
    if (random) row("seed", seed);
    row("instances", total);
    row("gated out", gated_out);
    row("below toughness", below_toughness);
    row("  of which with factor", below_with_factor);
    row("hypothesis satisfied", hypothesis);
    row("  factors found", factors_found);
    row("  violations", violations.size());
    row("certificates verified", certificates_verified);
    row("certificate failures", certificate_failures);
    if (criterion_runs || criterion_skipped) {
        row("criterion runs", criterion_runs);
        row("criterion skipped", criterion_skipped);
        row("criterion disagreements", criterion_disagreements);
        row("deltas evaluated", deltas_evaluated);
        row("odd deltas", odd_deltas);
        row("structure checks", structure_checks);
        row("structure failures", structure_failures);
    }
    os << std::left << std::setw(26) << "wall time" << std::fixed << std::setprecision(2) << seconds << " s\n";
    for (const auto& v : violations) {
        os << "\nviolation at instance " << v.key << ": tau=" << v.tau.str() << " k=" << k << "\n"
           << serialize_hypergraph(v.instance);
        if (v.barrier) os << "barrier:\n" << serialize_barrier(*v.barrier);
    }
    for (const auto& a : audit_failures)
        os << "\naudit failure at instance " << a.key << ": " << a.what << "\n" << serialize_hypergraph(a.instance);
    os << "\nresult: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string TheoremReport::porcelain() const {
    std::ostringstream os;
    os << "k=" << k << "\nmode=" << (random ? "random" : "exhaustive") << "\nseed=" << seed
       << "\ninstances=" << total << "\ngated_out=" << gated_out << "\nbelow_toughness=" << below_toughness
       << "\nbelow_with_factor=" << below_with_factor << "\nhypothesis=" << hypothesis
       << "\nfactors_found=" << factors_found << "\nviolations=" << violations.size()
       << "\ncertificates_verified=" << certificates_verified << "\ncertificate_failures=" << certificate_failures
       << "\ncriterion_runs=" << criterion_runs << "\ncriterion_skipped=" << criterion_skipped
       << "\ncriterion_disagreements=" << criterion_disagreements << "\ndeltas_evaluated=" << deltas_evaluated
       << "\nodd_deltas=" << odd_deltas << "\nstructure_checks=" << structure_checks
       << "\nstructure_failures=" << structure_failures << "\nseconds=" << std::fixed << std::setprecision(3)
       << seconds << "\npass=" << (passed() ? 1 : 0) << "\n";
    return os.str();
}

namespace {

bool tau_greater(const ToughnessValue& a, const ToughnessValue& b) {
    if (a.infinite || b.infinite) return a.infinite && !b.infinite;
    return a.value > b.value;
}

}  // namespace

TightnessResult tightness_search(const TightnessConfig& cfg) {
    const DegreeSpec spec(cfg.k);
    TightnessResult res;
    std::vector<int> sizes;
    for (int n = cfg.k + 1; n <= cfg.n_max; ++n)
        if (theorem_gate(n, cfg.k)) sizes.push_back(n);

    auto consider = [&](const Hypergraph& h) {
        if (res.examined >= cfg.budget) return false;
        const std::uint64_t index = res.examined++;
        const auto g = incidence_graph(h);
        if (find_2k_factor(g, spec)) return true;
        ++res.factorless;
        auto tau = toughness(h, cfg.limits);
        if (!res.best || tau_greater(tau, res.best->tau)) res.best = TightnessResult::Best{index, tau, h, std::nullopt};
        return true;
    };

    bool open = true;
    for (int n : sizes) {
        enumerate_graphs(n, [&](const Hypergraph& h) { return open = consider(h); });
        if (!open) break;
    }
    for (std::uint64_t t = 0; open && !sizes.empty() && res.examined < cfg.budget; ++t) {
        std::mt19937_64 rng(derive_seed(cfg.seed, t));
        GenParams p;
        p.n = sizes[uniform_int(rng, 0, static_cast<int>(sizes.size()) - 1)];
        p.m = uniform_int(rng, 1, 2 * p.n);
        p.size_lo = 2;
        p.size_hi = p.n;
        p.seed = rng();
        consider(gen_random_hypergraph(p));
    }

    if (res.best) {
        const auto g = incidence_graph(res.best->instance);
        if (g.vertex_count() <= cfg.limits.criterion_vertices)
            res.best->barrier = find_biased_barrier(g, spec, cfg.limits);
    }
    return res;
}

std::string TightnessResult::text() const {
    std::ostringstream os;
    os << "instances examined: " << examined << "\n"
       << "factor-less: " << factorless << "\n";
    if (!best) {
        os << "best: none\n";
        return os.str();
    }
    os << "best tau: " << best->tau.str() << " (instance " << best->index << ", witness "
       << format_set(best->tau.witness) << ")\n"
       << serialize_hypergraph(best->instance);
    if (best->barrier) os << "barrier:\n" << serialize_barrier(*best->barrier);
    else os << "barrier: omitted (over criterion budget)\n";
    return os.str();
}

std::string TightnessResult::porcelain() const {
    std::ostringstream os;
    os << "examined=" << examined << "\nfactorless=" << factorless << "\n";
    if (best) {
        os << "best_tau=" << best->tau.str() << "\nbest_index=" << best->index
           << "\nbest_n=" << best->instance.vertex_count() << "\nbest_m=" << best->instance.edge_count() << "\n";
        if (best->barrier) os << "best_delta=" << best->barrier->delta << "\n";
    } else {
        os << "best_tau=none\n";
    }
    return os.str();
}

}  // namespace berge
