#include "tsdt/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsdt {

namespace {

void collect_leaves(const StructNode* node, std::vector<NodeKey>& out) {
    if (node->is_leaf()) {
        out.push_back(node->key);
        return;
    }
    for (const auto& c : node->children) collect_leaves(c.get(), out);
}

// Walks down by following the constraint on the split attribute stored in the
// target leaf key; the leaf must belong to the subtree.
const StructNode* descend_towards(const StructNode* node, const NodeKey& leaf) {
    auto it = std::lower_bound(leaf.begin(), leaf.end(), node->attribute,
                               [](const Constraint& c, int a) { return c.first < a; });
    if (it == leaf.end() || it->first != node->attribute)
        throw std::invalid_argument("tree: key is not a leaf of this tree");
    return node->children.at(static_cast<std::size_t>(it->second)).get();
}

std::shared_ptr<const StructNode> split_rec(const StructNode* node, const NodeKey& leaf,
                                            int attribute, int cardinality) {
    auto copy = std::make_shared<StructNode>();
    copy->key = node->key;
    if (node->key == leaf) {
        if (!node->is_leaf())
            throw std::invalid_argument("split: target key is not a leaf");
        copy->attribute = attribute;
        copy->children.reserve(static_cast<std::size_t>(cardinality));
        for (int v = 0; v < cardinality; ++v) {
            auto child = std::make_shared<StructNode>();
            NodeKey child_key = leaf;
            child_key.emplace_back(attribute, v);
            child->key = canonical_key(std::move(child_key));
            copy->children.push_back(std::move(child));
        }
        return copy;
    }
    if (node->is_leaf())
        throw std::invalid_argument("split: key is not a leaf of this tree");
    copy->attribute = node->attribute;
    copy->children = node->children;
    auto it = std::lower_bound(leaf.begin(), leaf.end(), node->attribute,
                               [](const Constraint& c, int a) { return c.first < a; });
    if (it == leaf.end() || it->first != node->attribute)
        throw std::invalid_argument("split: key is not a leaf of this tree");
    const auto idx = static_cast<std::size_t>(it->second);
    copy->children.at(idx) = split_rec(node->children.at(idx).get(), leaf, attribute, cardinality);
    return copy;
}

// Prefix-prediction bookkeeping at one region: check correctness against the
// counts as of before this sample, then count it. Grid cells follow the same
// check-then-update order.
void update_stats(NodeStats& stats, const AttributeSchema& schema, const NodeKey& key,
                  const Instance& inst) {
    if (stats.n > 0 && majority_class(stats.class_counts) == inst.label) ++stats.correct;
    stats.ensure_grids(schema, key);
    const int K = schema.num_classes;
    for (auto& grid : stats.grids) {
        const int j = inst.values[static_cast<std::size_t>(grid.attribute)];
        auto row = grid.row(j, K);
        std::int64_t cell_n = 0;
        for (auto c : row) cell_n += c;
        if (cell_n > 0 && majority_class(row) == inst.label)
            ++grid.correct[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(inst.label)] += 1;
    }
    ++stats.class_counts[static_cast<std::size_t>(inst.label)];
    ++stats.n;
}

}  // namespace

TreeState make_root_tree() {
    auto root = std::make_shared<StructNode>();
    return {std::move(root), 0};
}

std::vector<NodeKey> tree_leaves(const TreeState& tree) {
    std::vector<NodeKey> out;
    collect_leaves(tree.root.get(), out);
    return out;
}

int count_leaves(const TreeState& tree) {
    std::vector<NodeKey> out;
    collect_leaves(tree.root.get(), out);
    return static_cast<int>(out.size());
}

const StructNode* route(const TreeState& tree, const Instance& inst) {
    const StructNode* node = tree.root.get();
    while (!node->is_leaf())
        node = node->children[static_cast<std::size_t>(
                                  inst.values[static_cast<std::size_t>(node->attribute)])]
                   .get();
    return node;
}

std::vector<const StructNode*> route_path(const TreeState& tree, const Instance& inst) {
    std::vector<const StructNode*> path;
    const StructNode* node = tree.root.get();
    path.push_back(node);
    while (!node->is_leaf()) {
        node = node->children[static_cast<std::size_t>(
                                  inst.values[static_cast<std::size_t>(node->attribute)])]
                   .get();
        path.push_back(node);
    }
    return path;
}

std::vector<int> available_splits(const TreeState&, const NodeKey& leaf,
                                  const AttributeSchema& schema) {
    std::vector<int> out;
    for (int a = 0; a < schema.num_attributes(); ++a)
        if (schema.cardinality(a) >= 2 && !key_constrains(leaf, a)) out.push_back(a);
    return out;
}

void observe(NodeStore& store, const AttributeSchema& schema, const TreeState& tree,
             const Instance& inst) {
    const auto path = route_path(tree, inst);
    if (!store.find(path.back()->key))
        throw std::runtime_error("observe: routed leaf is not in the node store");
    for (const StructNode* node : path)
        update_stats(store.ensure(node->key), schema, node->key, inst);
}

TreeState split(NodeStore& store, const AttributeSchema& schema, const TreeState& tree,
                const NodeKey& leaf, int attribute) {
    const auto avail = available_splits(tree, leaf, schema);
    if (std::find(avail.begin(), avail.end(), attribute) == avail.end())
        throw std::invalid_argument("split: attribute not available at this leaf");
    const int cardinality = schema.cardinality(attribute);
    const int K = schema.num_classes;

    const NodeStats& parent = store.at(leaf);
    const AttrGrid* grid = parent.grids_ready
                               ? parent.grid_for(attribute)
                               : nullptr;
    for (int v = 0; v < cardinality; ++v) {
        NodeKey child_key = leaf;
        child_key.emplace_back(attribute, v);
        child_key = canonical_key(std::move(child_key));
        if (store.find(child_key)) continue;  // shared region, keep its stats
        NodeStats& child = store.ensure(child_key);
        if (grid) {
            auto row = grid->row(v, K);
            for (int k = 0; k < K; ++k) {
                child.class_counts[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)];
                child.n += row[static_cast<std::size_t>(k)];
            }
            child.correct = grid->correct[static_cast<std::size_t>(v)];
        }
    }

    TreeState out;
    out.root = split_rec(tree.root.get(), leaf, attribute, cardinality);
    out.splits = tree.splits + 1;
    return out;
}

double p_hat(const NodeStore& store, const TreeState& tree, const NodeKey& leaf) {
    double p = 1.0;
    const StructNode* node = tree.root.get();
    while (!node->is_leaf()) {
        std::int64_t total = 0;
        for (const auto& sib : node->children) {
            const NodeStats* s = store.find(sib->key);
            total += s ? s->n : 0;
        }
        const StructNode* next = descend_towards(node, leaf);
        if (total == 0) {
            p *= 1.0 / static_cast<double>(node->children.size());
        } else {
            const NodeStats* s = store.find(next->key);
            p *= static_cast<double>(s ? s->n : 0) / static_cast<double>(total);
        }
        node = next;
    }
    if (node->key != leaf) throw std::invalid_argument("p_hat: key is not a leaf of this tree");
    return p;
}

namespace {

void leaf_probabilities_rec(const NodeStore& store, const StructNode* node, double p,
                            std::vector<LeafProbability>& out) {
    if (node->is_leaf()) {
        out.push_back({node, p});
        return;
    }
    std::int64_t total = 0;
    for (const auto& c : node->children) {
        const NodeStats* s = store.find(c->key);
        total += s ? s->n : 0;
    }
    for (const auto& c : node->children) {
        double factor;
        if (total == 0) {
            factor = 1.0 / static_cast<double>(node->children.size());
        } else {
            const NodeStats* s = store.find(c->key);
            factor = static_cast<double>(s ? s->n : 0) / static_cast<double>(total);
        }
        leaf_probabilities_rec(store, c.get(), p * factor, out);
    }
}

}  // namespace

std::vector<LeafProbability> leaf_probabilities(const NodeStore& store, const TreeState& tree) {
    std::vector<LeafProbability> out;
    leaf_probabilities_rec(store, tree.root.get(), 1.0, out);
    return out;
}

Gaussian leaf_value_posterior(const NodeStore& store, const TreeState& tree, double gamma) {
    const auto leaves = leaf_probabilities(store, tree);
    std::vector<WeightedGaussian> weighted;
    weighted.reserve(leaves.size());
    for (const auto& lp : leaves) {
        const NodeStats* s = store.find(lp.leaf->key);
        if (!s) throw std::runtime_error("leaf_value_posterior: leaf missing from store");
        weighted.push_back({lp.p, beta_moments(BetaParams::from_counts(s->correct, s->n))});
    }
    return aggregate_leaf_posteriors(weighted, gamma);
}

}  // namespace tsdt
