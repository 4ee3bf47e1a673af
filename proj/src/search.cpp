#include "tsdt/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace tsdt {

Variant parse_variant(const std::string& name) {
    if (name == "tsdt") return Variant::tsdt;
    if (name == "fast") return Variant::fast;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string to_string(Variant v) { return v == Variant::tsdt ? "tsdt" : "fast"; }

void ExperimentConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("config: M must be >= 1");
    if (samples_per_sim < 1) throw std::invalid_argument("config: m must be >= 1");
    if (lambda < 0.0) throw std::invalid_argument("config: lambda must be >= 0");
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("config: gamma must be in (0, 1]");
}

SearchTree::SearchTree(AttributeSchema schema, ExperimentConfig config)
    : schema_(std::move(schema)), config_(std::move(config)), store_(schema_.num_classes) {
    schema_.validate();
    config_.validate();
    TreeState root_state = make_root_tree();
    store_.ensure(root_state.root->key);
    root_ = create_node(std::move(root_state));
    root_->value = root_->terminal_value =
        leaf_value_posterior(store_, root_->state, config_.gamma);
}

SearchNode* SearchTree::create_node(TreeState state) {
    auto node = std::make_unique<SearchNode>();
    node->state = std::move(state);
    node->untreated = tree_leaves(node->state);
    const bool capped = config_.max_splits && node->state.splits >= *config_.max_splits;
    if (capped) {
        node->untreated.clear();
        node->fully_expanded = true;  // exposes only the terminal action
    }
    nodes_.push_back(std::move(node));
    return nodes_.back().get();
}

std::vector<ChildPosterior> SearchTree::child_posteriors(const SearchNode& node) const {
    std::vector<ChildPosterior> list;
    list.reserve(node.children.size() + 1);
    list.push_back({node.terminal_value, true});
    for (const auto& edge : node.children) list.push_back({edge.child->value, false});
    return list;
}

std::vector<SearchNode*> SearchTree::select_path(Rng& rng) {
    std::vector<SearchNode*> path;
    SearchNode* node = root_;
    node->visits += 1;
    path.push_back(node);
    while (node->fully_expanded) {
        const auto list = child_posteriors(*node);
        const int pick = thompson_select(list, config_.lambda, rng);
        if (pick == 0) break;  // terminal action
        node = node->children[static_cast<std::size_t>(pick - 1)].child;
        node->visits += 1;
        path.push_back(node);
    }
    return path;
}

void SearchTree::simulate(SearchNode& node, StreamSource& stream) {
    for (std::int64_t s = 0; s < config_.samples_per_sim; ++s)
        observe(store_, schema_, node.state, stream.next());
    node.terminal_value = leaf_value_posterior(store_, node.state, config_.gamma);
}

std::vector<SearchNode*> SearchTree::expand(SearchNode& node) {
    if (node.fully_expanded) throw std::logic_error("expand: node is fully expanded");

    // Untreated leaf with the highest Gini impurity; ties go to the larger
    // sample count, then to the lexicographically smallest key.
    std::size_t best = 0;
    double best_gini = -1.0;
    std::int64_t best_n = -1;
    for (std::size_t i = 0; i < node.untreated.size(); ++i) {
        const NodeStats* s = store_.find(node.untreated[i]);
        const double g = s ? gini(s->class_counts) : 0.0;
        const std::int64_t n = s ? s->n : 0;
        const bool wins = g > best_gini || (g == best_gini && n > best_n) ||
                          (g == best_gini && n == best_n &&
                           node.untreated[i] < node.untreated[best]);
        if (i == 0 || wins) {
            best = i;
            best_gini = g;
            best_n = n;
        }
    }
    const NodeKey leaf = node.untreated[best];
    node.untreated.erase(node.untreated.begin() + static_cast<std::ptrdiff_t>(best));

    std::vector<SearchNode*> created;
    for (int attribute : available_splits(node.state, leaf, schema_)) {
        TreeState child_state = split(store_, schema_, node.state, leaf, attribute);
        SearchNode* child = create_node(std::move(child_state));
        child->value = child->terminal_value =
            leaf_value_posterior(store_, child->state, config_.gamma);
        node.children.push_back({leaf, attribute, child});
        created.push_back(child);
    }
    if (node.untreated.empty()) node.fully_expanded = true;
    return created;
}

void SearchTree::backpropagate(std::span<SearchNode* const> path) {
    if (path.empty()) throw std::invalid_argument("backpropagate: empty path");
    for (std::size_t j = path.size(); j-- > 0;) {
        SearchNode* node = path[j];
        const auto list = child_posteriors(*node);
        if (config_.variant == Variant::fast) {
            node->value = fast_max(list, config_.lambda);
        } else {
            std::vector<Gaussian> penalized;
            penalized.reserve(list.size());
            for (const auto& c : list)
                penalized.push_back(penalize(c.value, c.is_terminal, config_.lambda));
            node->value = fold_max(penalized);
        }
    }
}

TreeState SearchTree::extract_greedy(std::vector<ExtractStep>* steps) const {
    const SearchNode* node = root_;
    while (!node->children.empty()) {
        const SearchNode* best_child = nullptr;
        const SearchNode::SplitEdge* best_edge = nullptr;
        double best_mu = node->terminal_value.mu;  // ties prefer the terminal action
        for (const auto& edge : node->children) {
            const double mu = edge.child->value.mu - config_.lambda;
            if (mu > best_mu) {
                best_mu = mu;
                best_child = edge.child;
                best_edge = &edge;
            }
        }
        if (!best_child) break;
        if (steps) steps->push_back({best_edge->leaf, best_edge->attribute});
        node = best_child;
    }
    return node->state;
}

FitResult fit(StreamSource& stream, const AttributeSchema& schema,
              const ExperimentConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    SearchTree search(schema, config);
    Rng rng(splitmix64(config.seed));

    FitResult result;
    result.trace.reserve(static_cast<std::size_t>(config.iterations));
    for (std::int64_t t = 1; t <= config.iterations; ++t) {
        if (config.budget_secs && elapsed_ms() >= *config.budget_secs * 1000.0) break;
        auto path = search.select_path(rng);
        SearchNode* end = path.back();
        search.simulate(*end, stream);
        if (!end->fully_expanded) search.expand(*end);
        search.backpropagate(path);
        result.iterations_run = t;
        result.samples_consumed += config.samples_per_sim;
        result.trace.push_back({t, search.root().value.mu, search.root().value.var,
                                static_cast<int>(path.size()), result.samples_consumed,
                                elapsed_ms()});
    }

    result.tree = search.extract_greedy(&result.extraction);
    result.predictor = make_predictor(result.tree, search.store());
    result.wall_ms = elapsed_ms();
    return result;
}

}  // namespace tsdt
