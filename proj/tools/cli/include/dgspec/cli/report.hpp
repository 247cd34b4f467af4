#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dgspec/cli/config.hpp"
#include "dgspec/dense_matrix.hpp"
#include "dgspec/graph.hpp"
#include "dgspec/markov.hpp"
#include "dgspec/mixing.hpp"
#include "dgspec/toughness.hpp"

namespace dgspec::cli {

struct GraphSummary {
    std::size_t n = 0;
    std::size_t edge_count = 0;
    bool strongly_connected = false;
    /// Only defined for strongly connected graphs.
    std::optional<std::size_t> period;
    std::vector<std::string> labels;

    friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct SpectralSection {
    /// Descending modulus, then real part, then imaginary part.
    std::vector<Complex> eigenvalues;
    double rho = 0.0;
    std::vector<double> pi;
    double pi_min = 0.0;
    double pi_max = 0.0;
    double norm_c = 0.0;
    double norm_c_inv = 0.0;
    double kappa = 0.0;
    double residual = 0.0;
    double inverse_residual = 0.0;
    double first_row_deviation = 0.0;
    double dominant_eigenvalue_deviation = 0.0;

    friend bool operator==(const SpectralSection&, const SpectralSection&) = default;
};

/// One (U, W) pair evaluated by `eml bound`.
struct PairEvaluation {
    SubsetPair pair;
    double lhs = 0.0;
    double bound = 0.0;
    double bound_simple = 0.0;
    /// Deviation with |U| pi(U) in place of |U| pi(W); verbose runs only.
    std::optional<double> lhs_u_mass;
    bool holds = true;

    friend bool operator==(const PairEvaluation&, const PairEvaluation&) = default;
};

enum class ToughnessMode { exact, bound, compare };

std::string_view mode_name(ToughnessMode mode);
/// Throws PreconditionError for anything but exact, bound or compare.
ToughnessMode parse_mode(std::string_view name);

struct ToughnessSection {
    ToughnessMode mode = ToughnessMode::exact;
    std::optional<ToughnessResult> exact;
    std::optional<double> spectral_bound;
    std::optional<double> gap;
    std::optional<bool> holds;
    std::string note;

    friend bool operator==(const ToughnessSection&, const ToughnessSection&) = default;
};

struct AnalysisReport {
    std::string command;
    GraphSummary graph;
    std::optional<SpectralSection> spectral;
    std::optional<EmlReport> eml;
    std::optional<PairEvaluation> pair;
    std::optional<ToughnessSection> toughness;
    /// File written by `generate`.
    std::optional<std::string> output;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

GraphSummary summarize_graph(const DirectedGraph& g);
SpectralSection summarize_spectrum(const SpectralProfile& profile);
ToughnessSection toughness_section(const BoundComparison& comparison);

/// Non-finite reals become the strings "infinite" / "-infinite".
nlohmann::json to_json(const AnalysisReport& report);
/// Inverse of to_json; throws ParseError on a malformed document.
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string render_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);
/// Long format, header `section,key,value`; one row per scalar, vectors
/// expanded as key[i].
std::string render_csv(const AnalysisReport& report);
std::string render(const AnalysisReport& report, OutputFormat format);

struct CompareRow {
    std::string graph;
    std::size_t n = 0;
    BoundComparison comparison;
};

/// Header `graph,n,exact,spectral_bound,gap,holds`, one row per entry.
std::string compare_table_csv(const std::vector<CompareRow>& rows);

}  // namespace dgspec::cli
