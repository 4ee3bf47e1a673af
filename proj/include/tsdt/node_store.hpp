#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tsdt/types.hpp"

namespace tsdt {

// A canonical input-space region: attribute == value constraints sorted by
// attribute index. Identical regions reached through different split orders
// compare equal and share one NodeStats.
using Constraint = std::pair<int, int>;  // (attribute index, category value)
using NodeKey = std::vector<Constraint>;

NodeKey canonical_key(NodeKey constraints);

bool key_constrains(const NodeKey& key, int attribute);

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& key) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (const auto& [a, v] : key) {
            h ^= splitmix64((static_cast<std::uint64_t>(a) << 32) |
                            static_cast<std::uint32_t>(v)) + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// argmax_k counts, ties to the lowest class index. Throws on all-zero counts.
int majority_class(std::span<const std::int64_t> class_counts);

// 1 - sum (n_k/n)^2; zero counts give 0 by convention.
double gini(std::span<const std::int64_t> class_counts);

// Per-(attribute, value) sufficient statistics tracked at a region for every
// attribute the region does not already constrain. counts is cardinality x K
// row-major; correct[j] counts prefix-prediction hits inside the (i, j) cell.
struct AttrGrid {
    int attribute = -1;
    std::vector<std::int64_t> counts;
    std::vector<std::int64_t> correct;

    std::span<const std::int64_t> row(int value, int num_classes) const {
        return {counts.data() + static_cast<std::size_t>(value) * num_classes,
                static_cast<std::size_t>(num_classes)};
    }
    std::span<std::int64_t> row(int value, int num_classes) {
        return {counts.data() + static_cast<std::size_t>(value) * num_classes,
                static_cast<std::size_t>(num_classes)};
    }
};

struct NodeStats {
    std::int64_t n = 0;
    std::int64_t correct = 0;  // prefix-prediction hits at this region
    std::vector<std::int64_t> class_counts;
    std::vector<AttrGrid> grids;  // ascending by attribute; built lazily
    bool grids_ready = false;

    // Grids cover exactly the attributes absent from the key with cardinality >= 1.
    void ensure_grids(const AttributeSchema& schema, const NodeKey& key);
    AttrGrid* grid_for(int attribute);
    const AttrGrid* grid_for(int attribute) const;
};

class NodeStore {
  public:
    explicit NodeStore(int num_classes) : num_classes_(num_classes) {}

    NodeStats& ensure(const NodeKey& key);
    NodeStats* find(const NodeKey& key);
    const NodeStats* find(const NodeKey& key) const;
    NodeStats& at(const NodeKey& key);
    const NodeStats& at(const NodeKey& key) const;

    std::size_t size() const { return map_.size(); }
    int num_classes() const { return num_classes_; }

  private:
    int num_classes_;
    std::unordered_map<NodeKey, NodeStats, NodeKeyHash> map_;
};

}  // namespace tsdt
