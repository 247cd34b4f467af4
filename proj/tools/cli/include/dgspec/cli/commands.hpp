#pragma once

#include <cstddef>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgspec/cli/config.hpp"
#include "dgspec/cli/report.hpp"
#include "dgspec/graph.hpp"
#include "dgspec/mixing.hpp"

namespace dgspec::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNumerical = 4;

/// Maps the library's exception types onto exit codes; anything unknown is
/// treated as a numerical failure.
int exit_code_for(const std::exception& e);

struct CommandResult {
    AnalysisReport report;
    int exit_code = kExitOk;
};

struct AnalyzeFlags {
    bool with_eml = false;
    bool with_toughness = false;
};

CommandResult cmd_analyze(const std::filesystem::path& path, const RunConfig& config,
                          const AnalyzeFlags& flags = {});

struct EmlVerifyFlags {
    /// Seeded sampling of this many pairs instead of the exhaustive sweep.
    std::optional<std::size_t> sample;
    bool nonempty_only = false;
    /// Per-pair rows kept in the report.
    std::size_t rows = 0;
};

/// Exit code 1 when any pair violates either bound beyond slack_tol.
CommandResult cmd_eml_verify(const std::filesystem::path& path, const EmlVerifyFlags& flags,
                             const RunConfig& config);

/// Comma-separated vertex tokens. A token naming a vertex label selects that
/// vertex; otherwise it must be a 0-based index. Throws ParseError.
VertexSubset parse_subset(const DirectedGraph& g, std::string_view list);

CommandResult cmd_eml_bound(const std::filesystem::path& path, std::string_view u,
                            std::string_view w, const RunConfig& config);

/// Violations in compare mode are findings; the exit code stays 0.
CommandResult cmd_toughness(const std::filesystem::path& path, ToughnessMode mode,
                            const RunConfig& config);

/// Writes the canonical edge list of the generated graph to `out`. The
/// random family takes its seed from the parameters, else from config.seed.
CommandResult cmd_generate(std::string_view family, const std::vector<std::string>& params,
                           const std::filesystem::path& out, const RunConfig& config);

}  // namespace dgspec::cli
