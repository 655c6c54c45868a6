#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/lattice_oracle.hpp"
#include "gorenstein/report.hpp"

namespace gorenstein::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,
    kExitGuard = 2,
    kExitNotGorenstein = 3,
    kExitPrecondition = 4,
};

struct CommonOptions {
    std::string dot_path;  // empty: no DOT output
    OracleLimits limits;
};

/// Result of a command: the JSON document (or edge-list text) written to stdout and the exit code.
struct CommandOutput {
    Json document;
    std::string text;  // used instead of `document` when non-empty
    int exit_code = kExitOk;
};

CommandOutput cmd_check(PolytopeKind kind, const std::string& file, const CommonOptions& common);

struct OracleOptions {
    std::optional<int> max_delta;
    bool hstar = false;
    std::optional<Int> normality;
    std::string dump_path;
};
CommandOutput cmd_oracle(PolytopeKind kind, const std::string& file, const OracleOptions& options,
                         const CommonOptions& common);

CommandOutput cmd_certify(PolytopeKind kind, const std::string& file, const CommonOptions& common);

struct GenerateOptions {
    std::string op;  // seed | glue | subdivide | collide | attach | blowup
    std::vector<std::string> inputs;
    std::optional<std::size_t> cycle;
    bool k4 = false;
    bool k2 = false;
    int delta = 0;
    std::vector<EdgeId> edges;
    std::vector<bool> flips;
    std::size_t multiplicity = 0;
    std::string output_path;
};
CommandOutput cmd_generate(const GenerateOptions& options, const CommonOptions& common);

struct SweepCliOptions {
    std::size_t max_vertices = 5;
    std::string kind = "base";
    bool cross_validate = false;
    std::size_t jobs = 1;
};
CommandOutput cmd_sweep(const SweepCliOptions& options, const CommonOptions& common);

CommandOutput cmd_replay(const std::string& file, const std::string& graph_file, const CommonOptions& common);

}  // namespace gorenstein::cli
