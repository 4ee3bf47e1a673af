#include "tsdt/data_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsdt {

std::vector<std::pair<Dataset, Dataset>> kfold(const Dataset& dataset, int k,
                                               std::uint64_t seed) {
    const auto n = dataset.size();
    if (k < 2 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("kfold: k out of range");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(splitmix64(seed));
    std::shuffle(order.begin(), order.end(), rng);

    const std::size_t base = n / static_cast<std::size_t>(k);
    const std::size_t extra = n % static_cast<std::size_t>(k);
    std::vector<std::pair<Dataset, Dataset>> out;
    std::size_t start = 0;
    for (int f = 0; f < k; ++f) {
        const std::size_t size = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
        Dataset train{dataset.schema, {}};
        Dataset test{dataset.schema, {}};
        for (std::size_t i = 0; i < n; ++i) {
            const bool in_test = i >= start && i < start + size;
            (in_test ? test : train).rows.push_back(dataset.rows[order[i]]);
        }
        start += size;
        out.emplace_back(std::move(train), std::move(test));
    }
    return out;
}

Predictor make_predictor(const TreeState& tree, const NodeStore& store) {
    Predictor pred;
    pred.tree = tree;
    const NodeStats* root_stats = store.find(tree.root->key);
    if (root_stats && root_stats->n > 0)
        pred.fallback_class = majority_class(root_stats->class_counts);

    std::vector<const StructNode*> stack{tree.root.get()};
    while (!stack.empty()) {
        const StructNode* node = stack.back();
        stack.pop_back();
        if (!node->is_leaf()) {
            for (const auto& c : node->children) stack.push_back(c.get());
            continue;
        }
        const NodeStats* s = store.find(node->key);
        pred.leaf_prediction[node] =
            (s && s->n > 0) ? majority_class(s->class_counts) : pred.fallback_class;
    }
    return pred;
}

namespace {

Metrics finish_metrics(const Predictor& predictor, const Dataset& dataset, double lambda,
                       std::int64_t hits) {
    Metrics m;
    m.accuracy = static_cast<double>(hits) / static_cast<double>(dataset.size());
    m.leaves = count_leaves(predictor.tree);
    m.splits = predictor.tree.splits;
    m.regularized_score = m.accuracy - lambda * m.splits;
    return m;
}

}  // namespace

Metrics evaluate(const Predictor& predictor, const Dataset& dataset, double lambda) {
    if (dataset.empty()) throw std::invalid_argument("evaluate: empty dataset");
    const auto n = static_cast<std::int64_t>(dataset.size());
    std::int64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& row = dataset.rows[static_cast<std::size_t>(i)];
        hits += predictor.predict(row) == row.label ? 1 : 0;
    }
    return finish_metrics(predictor, dataset, lambda, hits);
}

Metrics evaluate_serial(const Predictor& predictor, const Dataset& dataset, double lambda) {
    if (dataset.empty()) throw std::invalid_argument("evaluate: empty dataset");
    std::int64_t hits = 0;
    for (const auto& row : dataset.rows)
        hits += predictor.predict(row) == row.label ? 1 : 0;
    return finish_metrics(predictor, dataset, lambda, hits);
}

}  // namespace tsdt
