#include "dgspec/cli/config.hpp"

#include <string>

#include "dgspec/errors.hpp"

namespace dgspec::cli {

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "text";
}

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw PreconditionError("unknown output format '" + std::string(name) + "'");
}

void RunConfig::validate() const {
    auto positive = [](double value, const char* name) {
        if (!(value > 0.0)) throw PreconditionError(std::string(name) + " must be positive");
    };
    positive(slack_tol, "slack tolerance");
    positive(eig_tol, "eigen residual tolerance");
    positive(cluster_tol, "cluster tolerance");
    if (eml_cap < 2) throw PreconditionError("EML enumeration cap must be at least 2");
    if (toughness_cap < 2) throw PreconditionError("toughness enumeration cap must be at least 2");
}

SpectralOptions RunConfig::spectral_options() const {
    SpectralOptions options;
    options.eigen.residual_tolerance = eig_tol;
    options.eigen.cluster_tolerance = cluster_tol;
    return options;
}

ToughnessOptions RunConfig::toughness_options() const {
    ToughnessOptions options;
    options.enumeration_cap = toughness_cap;
    options.allow_over_cap = allow_over_cap;
    options.threads = threads;
    return options;
}

EmlPolicy RunConfig::eml_policy() const {
    EmlPolicy policy;
    policy.exhaustive_cap = eml_cap;
    policy.slack_tolerance = slack_tol;
    policy.seed = seed;
    policy.threads = threads;
    policy.include_u_mass_form = verbosity > 0;
    return policy;
}

}  // namespace dgspec::cli
