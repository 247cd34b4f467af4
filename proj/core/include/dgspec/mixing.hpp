#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dgspec/graph.hpp"
#include "dgspec/markov.hpp"

namespace dgspec {

/// Sorted, duplicate-free vertex indices.
using VertexSubset = std::vector<Vertex>;

struct SubsetPair {
    VertexSubset u;
    VertexSubset w;

    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// Subset of {0..n-1} with bit i of `mask` selecting vertex i.
VertexSubset subset_from_mask(std::uint64_t mask, std::size_t n);

/// Sorts, rejects duplicates and out-of-range vertices (PreconditionError).
VertexSubset make_subset(std::vector<Vertex> vertices, std::size_t n);

/// Which stationary mass multiplies |U| in the deviation term. The
/// deviation derived from the spectral expansion is |U| pi(W); the
/// alternative |U| pi(U) is kept only for side-by-side reporting.
enum class DeviationForm { expansion, u_mass };

/// | sum_{i in U, j in W} p_ij - |U| pi(W) |
double eml_lhs(const SpectralProfile& profile, const SubsetPair& pair,
               DeviationForm form = DeviationForm::expansion);

/// Slack below which a radicand factor is clipped to zero; anything more
/// negative is reported as a NumericalError.
inline constexpr double kRadicandClip = 1e-12;
inline constexpr double kRadicandFailure = 1e-9;

/// rho * sqrt((||C||^2 |U| - |U|^2/n) (||C^-1||^2 |W| - pi(W)^2 n))
double eml_bound(const SpectralProfile& profile, const SubsetPair& pair);

/// rho * sqrt(|U| |W|) * kappa(C)
double eml_bound_simple(const SpectralProfile& profile, const SubsetPair& pair);

struct EmlPolicy {
    enum class Kind { exhaustive, sample };
    Kind kind = Kind::exhaustive;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    bool nonempty_only = false;
    /// Exhaustive sweeps (4^n pairs) are refused above this many vertices.
    std::size_t exhaustive_cap = 13;
    /// Pairs whose lhs exceeds the bound by more than this count as violations.
    double slack_tolerance = 1e-9;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Keep per-pair rows for the first `max_rows` pairs in enumeration order.
    std::size_t max_rows = 0;
    /// Also evaluate the |U| pi(U) deviation form.
    bool include_u_mass_form = false;
};

/// Aggregate over all evaluated pairs for one bound.
struct BoundSummary {
    /// max over pairs of lhs - bound; equals -min_slack.
    double max_violation = 0.0;
    SubsetPair worst_pair;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    /// max lhs / bound over pairs with bound > slack_tolerance.
    double tightness_ratio = 0.0;
    std::size_t violations = 0;

    friend bool operator==(const BoundSummary&, const BoundSummary&) = default;
};

struct EmlRow {
    SubsetPair pair;
    double lhs = 0.0;
    double bound = 0.0;
    double bound_simple = 0.0;

    friend bool operator==(const EmlRow&, const EmlRow&) = default;
};

struct EmlReport {
    std::size_t n = 0;
    std::size_t pair_count = 0;
    bool exhaustive = true;
    bool nonempty_only = false;
    double slack_tolerance = 1e-9;
    BoundSummary bound;         // eml_bound
    BoundSummary bound_simple;   // eml_bound_simple
    /// max over pairs of eml_bound - eml_bound_simple (should be <= tolerance).
    double max_form_gap = 0.0;
    /// Summary for the |U| pi(U) deviation against eml_bound, when requested.
    std::optional<BoundSummary> u_mass_form;
    std::vector<EmlRow> rows;

    bool passed() const noexcept {
        return bound.max_violation <= slack_tolerance &&
               bound_simple.max_violation <= slack_tolerance && max_form_gap <= slack_tolerance;
    }

    friend bool operator==(const EmlReport&, const EmlReport&) = default;
};

/// Throws PreconditionError when an exhaustive sweep is requested above the
/// cap, or when sampling is requested with zero samples.
EmlReport verify_eml(const SpectralProfile& profile, const EmlPolicy& policy);

/// Adjacency degree k and mu = max |theta_i| over all adjacency eigenvalues
/// except the one at k.
struct RegularSpectrum {
    std::size_t k = 0;
    double mu = 0.0;
};

/// Throws PreconditionError unless g is symmetric and k-regular.
RegularSpectrum regular_adjacency_spectrum(const DirectedGraph& g);

struct AlonChungValues {
    double lhs = 0.0;  // | e(U,W) - k |U||W| / n |
    double rhs = 0.0;  // mu sqrt(|U||W| (1 - |U|/n)(1 - |W|/n))
};

/// e(U, W) counts arcs (u, w) with u in U and w in W.
AlonChungValues alon_chung_bound(const DirectedGraph& g, const RegularSpectrum& spectrum,
                                 const SubsetPair& pair);
AlonChungValues alon_chung_bound(const DirectedGraph& g, const SubsetPair& pair);

}  // namespace dgspec
