#include "tsdt/greedy.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tsdt {

void GreedyConfig::validate() const {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("greedy: delta must be in (0, 1]");
    if (grace_period < 1) throw std::invalid_argument("greedy: grace_period must be >= 1");
    if (tie_threshold < 0.0) throw std::invalid_argument("greedy: tie_threshold must be >= 0");
}

double hoeffding_bound(double range, double delta, std::int64_t n) {
    if (range <= 0.0) throw std::invalid_argument("hoeffding_bound: range must be > 0");
    if (n < 1) throw std::invalid_argument("hoeffding_bound: n must be >= 1");
    return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * static_cast<double>(n)));
}

double gini_gain(const NodeStats& stats, int attribute, int num_classes) {
    const AttrGrid* grid = stats.grid_for(attribute);
    if (!grid) throw std::invalid_argument("gini_gain: attribute not tracked at this leaf");
    const auto cardinality =
        static_cast<int>(grid->counts.size() / static_cast<std::size_t>(num_classes));

    std::vector<std::int64_t> marginal(static_cast<std::size_t>(num_classes), 0);
    std::int64_t total = 0;
    for (int v = 0; v < cardinality; ++v) {
        const auto row = grid->row(v, num_classes);
        for (int k = 0; k < num_classes; ++k) {
            marginal[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)];
            total += row[static_cast<std::size_t>(k)];
        }
    }
    if (total == 0) return 0.0;

    double weighted = 0.0;
    for (int v = 0; v < cardinality; ++v) {
        const auto row = grid->row(v, num_classes);
        std::int64_t row_n = 0;
        for (auto c : row) row_n += c;
        if (row_n == 0) continue;
        weighted += static_cast<double>(row_n) / static_cast<double>(total) * gini(row);
    }
    return gini(marginal) - weighted;
}

TreeState greedy_fit(StreamSource& stream, const AttributeSchema& schema,
                     const GreedyConfig& config, std::int64_t total_samples,
                     NodeStore& store) {
    config.validate();
    TreeState tree = make_root_tree();
    store.ensure(tree.root->key);
    std::map<NodeKey, std::int64_t> next_check;

    for (std::int64_t s = 0; s < total_samples; ++s) {
        const Instance inst = stream.next();
        const NodeKey leaf = route(tree, inst)->key;
        observe(store, schema, tree, inst);

        NodeStats& stats = store.at(leaf);
        auto [it, fresh] = next_check.try_emplace(leaf, 0);
        if (fresh) it->second = stats.n + config.grace_period - 1;
        if (stats.n < it->second) continue;
        it->second = stats.n + config.grace_period;

        if (config.max_depth && static_cast<int>(leaf.size()) >= *config.max_depth) continue;
        const auto candidates = available_splits(tree, leaf, schema);
        if (candidates.empty()) continue;

        int best_attr = candidates.front();
        double best = -1.0, second = -1.0;
        for (int a : candidates) {
            const double g = gini_gain(stats, a, schema.num_classes);
            if (g > best) {
                second = best;
                best = g;
                best_attr = a;
            } else if (g > second) {
                second = g;
            }
        }
        if (second < 0.0) second = 0.0;  // single candidate competes against no-gain

        const double bound = hoeffding_bound(1.0, config.delta, stats.n);
        if (best - second >= bound || bound < config.tie_threshold) {
            tree = split(store, schema, tree, leaf, best_attr);
            next_check.erase(leaf);
        }
    }
    return tree;
}

}  // namespace tsdt
