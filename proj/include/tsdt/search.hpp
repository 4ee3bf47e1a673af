#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsdt/data_ops.hpp"
#include "tsdt/node_store.hpp"
#include "tsdt/posterior.hpp"
#include "tsdt/stream.hpp"
#include "tsdt/tree.hpp"

namespace tsdt {

enum class Variant { tsdt, fast };

Variant parse_variant(const std::string& name);
std::string to_string(Variant v);

struct ExperimentConfig {
    std::int64_t iterations = 400;      // M
    std::int64_t samples_per_sim = 100; // m
    double lambda = 0.05;
    double gamma = 0.75;
    Variant variant = Variant::fast;
    std::uint64_t seed = 0;
    std::optional<int> max_splits;
    std::optional<double> budget_secs;

    void validate() const;
};

// A state of the tree-valued MDP: the decision tree it represents, the value
// posterior, the terminal-action posterior, and expansion bookkeeping.
struct SearchNode {
    TreeState state;
    Gaussian value;           // posterior on the optimal value from this state
    Gaussian terminal_value;  // posterior carried by the terminal action
    struct SplitEdge {
        NodeKey leaf;
        int attribute = -1;
        SearchNode* child = nullptr;
    };
    std::vector<SplitEdge> children;
    std::vector<NodeKey> untreated;  // leaves not yet expanded
    bool fully_expanded = false;
    std::int64_t visits = 0;
};

struct TraceRow {
    std::int64_t iteration = 0;
    double root_mu = 0.0;
    double root_var = 0.0;
    int episode_depth = 0;        // number of non-terminal states on the path
    std::int64_t samples_total = 0;
    double elapsed_ms = 0.0;
};

struct ExtractStep {
    NodeKey leaf;
    int attribute = -1;
};

struct FitResult {
    TreeState tree;
    Predictor predictor;
    std::vector<ExtractStep> extraction;
    std::vector<TraceRow> trace;
    std::int64_t iterations_run = 0;
    std::int64_t samples_consumed = 0;
    double wall_ms = 0.0;
};

class SearchTree {
  public:
    SearchTree(AttributeSchema schema, ExperimentConfig config);

    // Unrolls the Thompson policy from the root. At a node that is not fully
    // expanded the terminal action fires (the initial policy); otherwise one
    // draw per child decides between the terminal action and descending.
    std::vector<SearchNode*> select_path(Rng& rng);

    // Pulls m samples into the node's tree and refreshes its terminal posterior.
    void simulate(SearchNode& node, StreamSource& stream);

    // Expands one untreated leaf (highest Gini impurity; ties broken by larger
    // n then lexicographic key), creating a child per available attribute with
    // value and terminal posteriors initialised from the shared statistics.
    std::vector<SearchNode*> expand(SearchNode& node);

    // Refreshes value posteriors bottom-up along the path: max of the terminal
    // posterior and the penalized split children, by Clark fold (tsdt) or by
    // best penalized mean (fast).
    void backpropagate(std::span<SearchNode* const> path);

    // Greedy unroll over penalized posterior means; ties prefer the terminal
    // action. Stops at the terminal action or at a childless node.
    TreeState extract_greedy(std::vector<ExtractStep>* steps = nullptr) const;

    SearchNode& root() { return *root_; }
    const SearchNode& root() const { return *root_; }
    NodeStore& store() { return store_; }
    const NodeStore& store() const { return store_; }
    const AttributeSchema& schema() const { return schema_; }
    const ExperimentConfig& config() const { return config_; }
    std::size_t num_nodes() const { return nodes_.size(); }

  private:
    SearchNode* create_node(TreeState state);
    std::vector<ChildPosterior> child_posteriors(const SearchNode& node) const;

    AttributeSchema schema_;
    ExperimentConfig config_;
    NodeStore store_;
    std::vector<std::unique_ptr<SearchNode>> nodes_;
    SearchNode* root_ = nullptr;
};

// Runs the full loop (select, simulate, expand, backpropagate) for M
// iterations or until the wall-clock budget, then extracts greedily.
// Deterministic given the stream and config.seed.
FitResult fit(StreamSource& stream, const AttributeSchema& schema,
              const ExperimentConfig& config);

}  // namespace tsdt
