#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "dgspec/markov.hpp"
#include "dgspec/mixing.hpp"
#include "dgspec/toughness.hpp"

namespace dgspec::cli {

enum class OutputFormat { text, json, csv };

std::string_view format_name(OutputFormat format);
/// Throws PreconditionError for anything but text, json or csv.
OutputFormat parse_format(std::string_view name);

struct RunConfig {
    double slack_tol = 1e-9;
    double eig_tol = 1e-10;
    double cluster_tol = 1e-8;
    std::size_t eml_cap = 13;
    std::size_t toughness_cap = 20;
    /// Lets exact toughness run above toughness_cap (still bounded by
    /// kToughnessHardLimit).
    bool allow_over_cap = false;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    int verbosity = 0;

    /// Throws PreconditionError unless tolerances are positive and caps >= 2.
    void validate() const;

    SpectralOptions spectral_options() const;
    ToughnessOptions toughness_options() const;
    /// Exhaustive policy carrying the config's cap, tolerance and threads.
    EmlPolicy eml_policy() const;
};

}  // namespace dgspec::cli
