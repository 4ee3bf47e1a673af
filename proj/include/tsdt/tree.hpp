#pragma once

#include <memory>
#include <vector>

#include "tsdt/node_store.hpp"
#include "tsdt/posterior.hpp"
#include "tsdt/types.hpp"

namespace tsdt {

// Structural nodes are immutable and shared between TreeStates; split() does a
// path copy, so sibling trees in a search share everything but the split spine.
struct StructNode {
    NodeKey key;
    int attribute = -1;  // -1 for a leaf
    std::vector<std::shared_ptr<const StructNode>> children;  // by category value

    bool is_leaf() const { return attribute < 0; }
};

struct TreeState {
    std::shared_ptr<const StructNode> root;
    int splits = 0;  // S(T)
};

TreeState make_root_tree();

// Leaf keys in depth-first, category-value order.
std::vector<NodeKey> tree_leaves(const TreeState& tree);

int count_leaves(const TreeState& tree);

const StructNode* route(const TreeState& tree, const Instance& inst);
std::vector<const StructNode*> route_path(const TreeState& tree, const Instance& inst);

// Attributes not constrained by the leaf key and with cardinality >= 2.
std::vector<int> available_splits(const TreeState& tree, const NodeKey& leaf,
                                  const AttributeSchema& schema);

// Routes the instance and updates shared statistics at every structural node
// on the path: the prefix-prediction hit is checked against counts as they
// were before this sample, then counts are incremented; same per grid cell.
void observe(NodeStore& store, const AttributeSchema& schema, const TreeState& tree,
             const Instance& inst);

// New TreeState with `leaf` split on `attribute`. Child regions absent from
// the store are seeded from the parent grid (n, class counts, prefix hits;
// grids start empty). Existing child regions keep their accumulated stats.
TreeState split(NodeStore& store, const AttributeSchema& schema, const TreeState& tree,
                const NodeKey& leaf, int attribute);

// Chain-rule leaf-probability estimator: product over the structural path of
// n(child) / sum over siblings, a zero-total split contributing the uniform
// 1/#siblings factor.
double p_hat(const NodeStore& store, const TreeState& tree, const NodeKey& leaf);

struct LeafProbability {
    const StructNode* leaf = nullptr;
    double p = 0.0;
};
std::vector<LeafProbability> leaf_probabilities(const NodeStore& store, const TreeState& tree);

// Search-leaf posterior: Beta(1+c, 1+n-c) per leaf folded through the chain
// rule weights; variance raised to gamma.
Gaussian leaf_value_posterior(const NodeStore& store, const TreeState& tree, double gamma);

}  // namespace tsdt
