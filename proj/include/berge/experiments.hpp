// experiments.hpp
// Empirical checks of the toughness => Berge-k-factor theorem and the
// search for tough factor-less instances.

#pragma once

#include "berge/common.hpp"
#include "berge/hypergraph.hpp"
#include "berge/parity_criterion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berge {

enum class TheoremMode { exhaustive, random };

struct TheoremConfig {
    int k = 1;
    int n_lo = 1;
    int n_hi = 4;
    TheoremMode mode = TheoremMode::exhaustive;
    int trials = 0;            // random mode
    std::uint64_t seed = 1;    // random mode
    int m_max = 6;             // edges per instance (exhaustive: multiset size bound)
    int size_lo = 2;
    int size_hi = 0;           // 0: up to n
    /// Also run the parity criterion on every gated instance and the
    /// barrier-structure check on every factor-less one.
    bool audit = false;
    Budget budget;
};

struct ViolationRecord {
    std::uint64_t key = 0;  // census index or trial number
    Hypergraph instance;
    ToughnessValue tau;
    std::optional<Barrier> barrier;
};

struct AuditRecord {
    std::uint64_t key = 0;
    Hypergraph instance;
    std::string what;
};

struct TheoremReport {
    int k = 0;
    std::uint64_t seed = 0;
    bool random = false;
    std::uint64_t total = 0;
    std::uint64_t gated_out = 0;        // k n odd or n < k + 1
    std::uint64_t below_toughness = 0;  // gated in, tau < k
    std::uint64_t hypothesis = 0;       // gated in, tau >= k
    std::uint64_t factors_found = 0;    // hypothesis instances with a factor
    std::uint64_t below_with_factor = 0;
    std::uint64_t certificates_verified = 0;
    std::uint64_t certificate_failures = 0;
    std::vector<ViolationRecord> violations;

    // audit counters
    std::uint64_t criterion_runs = 0;
    std::uint64_t criterion_skipped = 0;  // over the criterion budget
    std::uint64_t criterion_disagreements = 0;
    std::uint64_t deltas_evaluated = 0;
    std::uint64_t odd_deltas = 0;
    std::uint64_t structure_checks = 0;
    std::uint64_t structure_failures = 0;
    std::vector<AuditRecord> audit_failures;

    double seconds = 0;

    bool passed() const {
        return violations.empty() && certificate_failures == 0 && criterion_disagreements == 0 &&
               odd_deltas == 0 && structure_failures == 0;
    }
    std::string text() const;
    std::string porcelain() const;
};

/// Throws BudgetExceeded beyond desk scale (exhaustive n <= 5, random n <= 10).
TheoremReport verify_theorem(const TheoremConfig& cfg);

/// Hypothesis gate: k n even and n >= k + 1.
bool theorem_gate(int n, int k);

struct TightnessConfig {
    int k = 1;
    std::uint64_t budget = 0;  // instances examined
    int n_max = 6;
    std::uint64_t seed = 1;
    Budget limits;
};

struct TightnessResult {
    std::uint64_t examined = 0;
    std::uint64_t factorless = 0;
    struct Best {
        std::uint64_t index = 0;  // position in the instance stream
        ToughnessValue tau;
        Hypergraph instance;
        std::optional<Barrier> barrier;  // absent when over the criterion budget
    };
    std::optional<Best> best;

    std::string text() const;
    std::string porcelain() const;
};

/// Walks a deterministic instance stream (all graphs on k+1..n_max vertices
/// with k n even, then seeded random hypergraphs) for `budget` instances,
/// keeping the factor-less instance of largest toughness. The first
/// instance achieving the maximum wins, so results are monotone in budget.
TightnessResult tightness_search(const TightnessConfig& cfg);

}  // namespace berge
