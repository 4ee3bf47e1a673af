#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsdt/encode.hpp"
#include "tsdt/greedy.hpp"
#include "tsdt/search.hpp"
#include "tsdt/tree_io.hpp"

namespace tsdt {

enum class Command { synth, fit, crossval, export_tree };

Command parse_command(const std::string& name);

struct RunSpec {
    Command command = Command::synth;
    std::string algo = "fast";  // tsdt | fast | greedy

    // synthetic stream
    int q = 5;
    int reps = 1;

    // dataset input
    std::string dataset;
    std::string label_col;  // empty: last column of the header
    EncodeMode encoding = EncodeMode::none;
    int k = 5;

    ExperimentConfig mcts;  // seed acts as the base seed; run r uses seed + r
    GreedyConfig greedy;
    std::int64_t total_samples = -1;  // greedy sample budget; -1 means M*m
    std::vector<double> lambda_grid;  // crossval; empty means the default grid

    std::string out_dir = "out";
    std::string input_tree;  // export-tree input path

    void validate() const;
};

// Merges a JSON config object with flag overrides (flags win); keys mirror the
// CLI flag names and unknown keys are rejected by name.
RunSpec load_config(const nlohmann::json& file_part, const nlohmann::json& flag_part);
RunSpec load_config_file(const std::string& path, const nlohmann::json& flag_overrides);

// One results.csv row. Column order is fixed:
// algo,variant,dataset,encoding,lambda,seed,fold,M,m,gamma,leaves,splits,
// train_acc,test_acc,perfect,elapsed_ms
struct RunRow {
    std::string algo;
    std::string variant;
    std::string dataset;
    std::string encoding;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    int fold = -1;
    std::int64_t iterations = 0;
    std::int64_t samples_per_sim = 0;
    double gamma = 0.0;
    int leaves = 0;
    int splits = 0;
    double train_acc = 0.0;
    double test_acc = 0.0;
    int perfect = 0;
    double elapsed_ms = 0.0;
};

std::string results_header();
std::string format_row(const RunRow& row);

// Canonical structural fingerprint ("S<attr>(...)" / "L<pred>"); children are
// already in category order, so equal strings mean isomorphic classifiers.
std::string canonical_shape(const DumpNode& node);

// Matches either orientation of the minimal 4-leaf tree for the synthetic
// concept (root on attribute 0 or 1, second level on the other).
bool is_xor_optimal_tree(const DumpNode& node);

struct CommandOutcome {
    int exit_code = 0;
    std::string summary;
    std::vector<RunRow> rows;
};

CommandOutcome cmd_synth(const RunSpec& spec);
CommandOutcome cmd_fit(const RunSpec& spec);
CommandOutcome cmd_crossval(const RunSpec& spec);
CommandOutcome cmd_export_tree(const RunSpec& spec);

// Dispatch + summary printing; returns the process exit code.
int run_command(const RunSpec& spec);

}  // namespace tsdt
