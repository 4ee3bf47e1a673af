#pragma once

#include <cstdint>
#include <optional>

#include "tsdt/node_store.hpp"
#include "tsdt/stream.hpp"
#include "tsdt/tree.hpp"

namespace tsdt {

struct GreedyConfig {
    double delta = 1e-7;
    std::int64_t grace_period = 200;
    double tie_threshold = 0.05;  // split on ties once the bound drops below
    std::optional<int> max_depth;

    void validate() const;
};

// epsilon = sqrt(R^2 ln(1/delta) / (2n))
double hoeffding_bound(double range, double delta, std::int64_t n);

// Gini gain of splitting on `attribute`, computed on the grid's own sample
// base (row-marginal class counts vs per-value rows); empty rows contribute 0.
double gini_gain(const NodeStats& stats, int attribute, int num_classes);

// Single-pass online tree growth: route, observe, and every grace_period
// samples at a leaf split on the best attribute when the top-two gain gap
// clears the Hoeffding bound, or when the bound itself has shrunk below the
// tie threshold. The caller owns the store (empty on entry).
TreeState greedy_fit(StreamSource& stream, const AttributeSchema& schema,
                     const GreedyConfig& config, std::int64_t total_samples,
                     NodeStore& store);

}  // namespace tsdt
