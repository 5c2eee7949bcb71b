// common.hpp
// Shared value types: exact rationals, verdicts, error classes and
// enumeration budgets.

#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace berge {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

/// Raised when an exhaustive kernel would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text-format parsers.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact non-negative rational in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Toughness of a hypergraph (or Y-toughness of a bipartite graph).
struct ToughnessValue {
    bool infinite = true;
    Rational value;        // only meaningful when finite
    VertexSet witness;     // cutset achieving the minimum
    int components = 0;    // c(H - witness)

    static ToughnessValue make_infinite() { return {}; }

    /// True iff this toughness is at least t (infinity dominates).
    bool at_least(const Rational& t) const { return infinite || value >= t; }

    /// "inf" or "p/q".
    std::string str() const;

    friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;
};

/// Accept, or reject with a reason naming the first violated clause.
struct Verdict {
    bool accepted = true;
    std::string reason;

    static Verdict accept() { return {}; }
    static Verdict reject(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return accepted; }
};

/// Limits on the exhaustive kernels. Exceeding a limit raises BudgetExceeded.
struct Budget {
    int toughness_vertices = 20;    // 2^n cutsets
    int y_toughness_vertices = 20;  // 2^|Y| cutsets
    int criterion_vertices = 18;    // 3^|V| disjoint pairs
    int structure_subset = 20;      // full Z-enumeration bound in barrier checks

    /// Defaults overridden by the BF_BUDGET environment variable, if set.
    /// Accepted forms: a single integer applied to every limit, or a comma list
    /// of key=value with keys toughness, y-toughness, criterion, structure.
    static Budget from_environment();
    static Budget parse(const std::string& text);
};

std::string format_set(const VertexSet& s);

}  // namespace berge
