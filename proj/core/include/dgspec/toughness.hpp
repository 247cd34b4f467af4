#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "dgspec/graph.hpp"
#include "dgspec/markov.hpp"

namespace dgspec {

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

/// Directed toughness: min |S| / c(G - S) over vertex sets S whose removal
/// leaves at least two strongly connected components. `value` is +infinity
/// when no such S exists (complete graphs), and then witness is empty.
struct ToughnessResult {
    double value = kInfinite;
    std::vector<Vertex> witness;
    std::size_t component_count_at_witness = 0;

    bool is_infinite() const noexcept { return witness.empty(); }

    friend bool operator==(const ToughnessResult&, const ToughnessResult&) = default;
};

struct ToughnessOptions {
    std::size_t enumeration_cap = 20;
    /// Permits n above enumeration_cap, up to kToughnessHardLimit.
    bool allow_over_cap = false;
    unsigned threads = 0;
};

inline constexpr std::size_t kToughnessHardLimit = 30;

/// Exhaustive over all S with 0 < |S| < n. Ties go to the smaller |S|, then
/// the numerically smaller bitmask (bit i = vertex i).
/// Throws PreconditionError if g is not strongly connected or too large.
ToughnessResult exact_toughness(const DirectedGraph& g, const ToughnessOptions& options = {});

/// (1/3) (pi_min / (pi_max rho kappa) - 1 / (1 + rho ||C||^2 pi_min / (kappa pi_max)) - 1).
/// Returns +infinity when rho == 0, where the first term is unbounded.
double toughness_spectral_bound(const SpectralProfile& profile);

/// (1/3) (k^2 / (k mu + mu^2) - 1); +infinity when mu == 0.
double alon_toughness_formula(double k, double mu);

/// alon_toughness_formula with k and mu taken from the adjacency spectrum.
/// Throws PreconditionError unless g is symmetric and k-regular.
double alon_toughness_bound(const DirectedGraph& g);

struct BoundComparison {
    ToughnessResult exact;
    double spectral_bound = 0.0;
    /// exact - spectral_bound; +infinity when exact is infinite.
    double gap = 0.0;
    /// exact >= spectral_bound - tolerance.
    bool holds = true;
    std::string note;

    friend bool operator==(const BoundComparison&, const BoundComparison&) = default;
};

inline constexpr double kBoundHoldsTolerance = 1e-9;

/// Runs both sides; a failing inequality is reported, never thrown.
BoundComparison compare_bounds(const DirectedGraph& g, const SpectralOptions& spectral = {},
                               const ToughnessOptions& toughness = {});
BoundComparison compare_bounds(const DirectedGraph& g, const SpectralProfile& profile,
                               const ToughnessOptions& toughness = {});

}  // namespace dgspec
