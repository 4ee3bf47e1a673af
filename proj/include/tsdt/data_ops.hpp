#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tsdt/node_store.hpp"
#include "tsdt/tree.hpp"
#include "tsdt/types.hpp"

namespace tsdt {

// Seeded shuffle followed by contiguous fold assignment; sizes differ by at
// most one, every row lands in exactly one test fold.
std::vector<std::pair<Dataset, Dataset>> kfold(const Dataset& dataset, int k,
                                               std::uint64_t seed);

// A tree plus its prediction rule: per-leaf majority class from the training
// statistics, with data-starved leaves falling back to the global majority of
// the training stream (the root region counts).
struct Predictor {
    TreeState tree;
    std::unordered_map<const StructNode*, int> leaf_prediction;
    int fallback_class = 0;

    int predict(const Instance& inst) const {
        const StructNode* leaf = route(tree, inst);
        auto it = leaf_prediction.find(leaf);
        return it == leaf_prediction.end() ? fallback_class : it->second;
    }
};

Predictor make_predictor(const TreeState& tree, const NodeStore& store);

struct Metrics {
    double accuracy = 0.0;
    int leaves = 0;
    int splits = 0;
    double regularized_score = 0.0;  // accuracy - lambda * splits
};

// OpenMP-parallel accuracy kernel over the dataset rows.
Metrics evaluate(const Predictor& predictor, const Dataset& dataset, double lambda);

// Serial reference for the parallel kernel; kept for testing and benchmarks.
Metrics evaluate_serial(const Predictor& predictor, const Dataset& dataset, double lambda);

}  // namespace tsdt
