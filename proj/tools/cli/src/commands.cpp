#include "dgspec/cli/commands.hpp"

#include <charconv>

#include "dgspec/edge_list.hpp"
#include "dgspec/errors.hpp"
#include "dgspec/generators.hpp"
#include "dgspec/markov.hpp"
#include "dgspec/toughness.hpp"

namespace dgspec::cli {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const PreconditionError*>(&e)) return kExitPrecondition;
    return kExitNumerical;
}

CommandResult cmd_analyze(const std::filesystem::path& path, const RunConfig& config,
                          const AnalyzeFlags& flags) {
    config.validate();
    const DirectedGraph g = read_edge_list(path);
    CommandResult result;
    result.report.command = "analyze";
    result.report.graph = summarize_graph(g);
    const SpectralProfile profile = spectral_profile(g, config.spectral_options());
    result.report.spectral = summarize_spectrum(profile);
    if (flags.with_eml) {
        EmlReport eml = verify_eml(profile, config.eml_policy());
        if (!eml.passed()) result.exit_code = kExitViolation;
        result.report.eml = std::move(eml);
    }
    if (flags.with_toughness) {
        result.report.toughness =
            toughness_section(compare_bounds(g, profile, config.toughness_options()));
    }
    return result;
}

CommandResult cmd_eml_verify(const std::filesystem::path& path, const EmlVerifyFlags& flags,
                             const RunConfig& config) {
    config.validate();
    const DirectedGraph g = read_edge_list(path);
    CommandResult result;
    result.report.command = "eml verify";
    result.report.graph = summarize_graph(g);
    const SpectralProfile profile = spectral_profile(g, config.spectral_options());

    EmlPolicy policy = config.eml_policy();
    if (flags.sample) {
        policy.kind = EmlPolicy::Kind::sample;
        policy.sample_count = *flags.sample;
    }
    policy.nonempty_only = flags.nonempty_only;
    policy.max_rows = flags.rows;
    EmlReport eml = verify_eml(profile, policy);
    if (!eml.passed()) result.exit_code = kExitViolation;
    result.report.eml = std::move(eml);
    return result;
}

VertexSubset parse_subset(const DirectedGraph& g, std::string_view list) {
    std::vector<Vertex> vertices;
    std::size_t start = 0;
    while (start <= list.size() && !list.empty()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string_view::npos) comma = list.size();
        std::string_view token = list.substr(start, comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) throw ParseError("empty vertex token in '" + std::string(list) + "'");

        if (auto v = g.find_label(token)) {
            vertices.push_back(*v);
        } else {
            Vertex index = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
            if (ec != std::errc{} || end != token.data() + token.size() || index >= g.vertex_count()) {
                throw ParseError("unknown vertex '" + std::string(token) + "'");
            }
            vertices.push_back(index);
        }
        start = comma + 1;
    }
    try {
        return make_subset(std::move(vertices), g.vertex_count());
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

CommandResult cmd_eml_bound(const std::filesystem::path& path, std::string_view u,
                            std::string_view w, const RunConfig& config) {
    config.validate();
    const DirectedGraph g = read_edge_list(path);
    const SubsetPair pair{parse_subset(g, u), parse_subset(g, w)};
    CommandResult result;
    result.report.command = "eml bound";
    result.report.graph = summarize_graph(g);
    const SpectralProfile profile = spectral_profile(g, config.spectral_options());

    PairEvaluation eval;
    eval.pair = pair;
    eval.lhs = eml_lhs(profile, pair);
    eval.bound = eml_bound(profile, pair);
    eval.bound_simple = eml_bound_simple(profile, pair);
    if (config.verbosity > 0) eval.lhs_u_mass = eml_lhs(profile, pair, DeviationForm::u_mass);
    eval.holds = eval.lhs <= eval.bound + config.slack_tol &&
                 eval.bound <= eval.bound_simple + config.slack_tol;
    if (!eval.holds) result.exit_code = kExitViolation;
    result.report.pair = std::move(eval);
    return result;
}

CommandResult cmd_toughness(const std::filesystem::path& path, ToughnessMode mode,
                            const RunConfig& config) {
    config.validate();
    const DirectedGraph g = read_edge_list(path);
    CommandResult result;
    result.report.command = "toughness " + std::string(mode_name(mode));
    result.report.graph = summarize_graph(g);

    ToughnessSection section;
    switch (mode) {
        case ToughnessMode::exact:
            section.exact = exact_toughness(g, config.toughness_options());
            break;
        case ToughnessMode::bound: {
            const SpectralProfile profile = spectral_profile(g, config.spectral_options());
            section.spectral_bound = toughness_spectral_bound(profile);
            if (profile.rho == 0.0) section.note = "rho = 0: spectral bound is unbounded";
            break;
        }
        case ToughnessMode::compare:
            section = toughness_section(
                compare_bounds(g, config.spectral_options(), config.toughness_options()));
            break;
    }
    section.mode = mode;
    result.report.toughness = std::move(section);
    return result;
}

CommandResult cmd_generate(std::string_view family, const std::vector<std::string>& params,
                           const std::filesystem::path& out, const RunConfig& config) {
    config.validate();
    const DirectedGraph g = generate(parse_generator_args(family, params, config.seed));
    write_edge_list(g, out);
    CommandResult result;
    result.report.command = "generate";
    result.report.graph = summarize_graph(g);
    result.report.output = out.string();
    return result;
}

}  // namespace dgspec::cli
