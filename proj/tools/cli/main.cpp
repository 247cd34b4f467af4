#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgspec/cli/commands.hpp"
#include "dgspec/cli/config.hpp"
#include "dgspec/cli/report.hpp"

using namespace dgspec::cli;

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of directed graphs through their random-walk matrix"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv")
        ->envname("DGSPEC_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--slack-tol", config.slack_tol, "Allowed excess of lhs over a bound")
        ->envname("DGSPEC_SLACK_TOL");
    app.add_option("--eig-tol", config.eig_tol, "Relative eigen residual tolerance")
        ->envname("DGSPEC_EIG_TOL");
    app.add_option("--cluster-tol", config.cluster_tol, "Relative eigenvalue clustering tolerance")
        ->envname("DGSPEC_CLUSTER_TOL");
    app.add_option("--eml-cap", config.eml_cap, "Largest n for exhaustive EML sweeps")
        ->envname("DGSPEC_EML_CAP");
    app.add_option("--toughness-cap", config.toughness_cap, "Largest n for exact toughness")
        ->envname("DGSPEC_TOUGHNESS_CAP");
    app.add_flag("--allow-over-cap", config.allow_over_cap,
                 "Run exact toughness above --toughness-cap (at most 30 vertices)")
        ->envname("DGSPEC_ALLOW_OVER_CAP");
    app.add_option("--seed", config.seed, "Seed for sampling and random generators")
        ->envname("DGSPEC_SEED");
    app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")
        ->envname("DGSPEC_THREADS");
    app.add_flag("-v,--verbose", config.verbosity, "More detail; repeatable")
        ->envname("DGSPEC_VERBOSITY");

    std::string file;

    auto* analyze = app.add_subcommand("analyze", "Spectral profile of an edge-list file");
    AnalyzeFlags analyze_flags;
    analyze->add_option("file", file, "Edge-list file")->required();
    analyze->add_flag("--eml", analyze_flags.with_eml, "Include an exhaustive EML sweep");
    analyze->add_flag("--toughness", analyze_flags.with_toughness,
                      "Include exact toughness and the spectral bound");

    auto* eml = app.add_subcommand("eml", "Expander mixing lemma checks");
    eml->require_subcommand(1);
    auto* verify = eml->add_subcommand("verify", "Check both bounds over subset pairs");
    EmlVerifyFlags verify_flags;
    std::size_t sample = 0;
    verify->add_option("file", file, "Edge-list file")->required();
    auto* sample_opt = verify->add_option("--sample", sample, "Check N seeded random pairs")
                           ->check(CLI::PositiveNumber);
    verify->add_flag("--nonempty-only", verify_flags.nonempty_only, "Skip empty U or W");
    verify->add_option("--rows", verify_flags.rows, "Report the first N pairs individually");

    auto* bound = eml->add_subcommand("bound", "Evaluate both bounds for one pair");
    std::string u_list, w_list;
    bound->add_option("file", file, "Edge-list file")->required();
    bound->add_option("--u", u_list, "Comma-separated indices or labels")->required();
    bound->add_option("--w", w_list, "Comma-separated indices or labels")->required();

    auto* toughness = app.add_subcommand("toughness", "Exact toughness and its spectral bound");
    std::string mode;
    toughness->add_option("mode", mode, "exact, bound or compare")
        ->required()
        ->check(CLI::IsMember({"exact", "bound", "compare"}));
    toughness->add_option("file", file, "Edge-list file")->required();

    auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
    std::string family, out;
    std::vector<std::string> params;
    gen->add_option("family", family, "Graph family")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("-o,--output", out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        config.format = parse_format(format);
        CommandResult result;
        if (*analyze) {
            result = cmd_analyze(file, config, analyze_flags);
        } else if (*verify) {
            if (*sample_opt) verify_flags.sample = sample;
            result = cmd_eml_verify(file, verify_flags, config);
        } else if (*bound) {
            result = cmd_eml_bound(file, u_list, w_list, config);
        } else if (*toughness) {
            result = cmd_toughness(file, parse_mode(mode), config);
        } else {
            result = cmd_generate(family, params, out, config);
        }
        std::cout << render(result.report, config.format);
        return result.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    }
}
