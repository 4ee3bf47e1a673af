#include "tsdt/node_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsdt {

NodeKey canonical_key(NodeKey constraints) {
    std::sort(constraints.begin(), constraints.end());
    for (std::size_t i = 1; i < constraints.size(); ++i)
        if (constraints[i].first == constraints[i - 1].first)
            throw std::invalid_argument("canonical_key: duplicate attribute index");
    return constraints;
}

bool key_constrains(const NodeKey& key, int attribute) {
    auto it = std::lower_bound(key.begin(), key.end(), attribute,
                               [](const Constraint& c, int a) { return c.first < a; });
    return it != key.end() && it->first == attribute;
}

int majority_class(std::span<const std::int64_t> class_counts) {
    int best = -1;
    std::int64_t best_count = 0;
    for (std::size_t k = 0; k < class_counts.size(); ++k) {
        if (class_counts[k] > best_count) {
            best = static_cast<int>(k);
            best_count = class_counts[k];
        }
    }
    if (best < 0) throw std::invalid_argument("majority_class: all counts are zero");
    return best;
}

double gini(std::span<const std::int64_t> class_counts) {
    std::int64_t n = 0;
    for (auto c : class_counts) n += c;
    if (n == 0) return 0.0;
    double sum_sq = 0.0;
    for (auto c : class_counts) {
        const double p = static_cast<double>(c) / static_cast<double>(n);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

void NodeStats::ensure_grids(const AttributeSchema& schema, const NodeKey& key) {
    if (grids_ready) return;
    const int K = schema.num_classes;
    grids.clear();
    for (int a = 0; a < schema.num_attributes(); ++a) {
        if (key_constrains(key, a)) continue;
        AttrGrid g;
        g.attribute = a;
        g.counts.assign(static_cast<std::size_t>(schema.cardinality(a)) * K, 0);
        g.correct.assign(static_cast<std::size_t>(schema.cardinality(a)), 0);
        grids.push_back(std::move(g));
    }
    grids_ready = true;
}

AttrGrid* NodeStats::grid_for(int attribute) {
    auto it = std::lower_bound(grids.begin(), grids.end(), attribute,
                               [](const AttrGrid& g, int a) { return g.attribute < a; });
    if (it == grids.end() || it->attribute != attribute) return nullptr;
    return &*it;
}

const AttrGrid* NodeStats::grid_for(int attribute) const {
    return const_cast<NodeStats*>(this)->grid_for(attribute);
}

NodeStats& NodeStore::ensure(const NodeKey& key) {
    auto [it, inserted] = map_.try_emplace(key);
    if (inserted) it->second.class_counts.assign(static_cast<std::size_t>(num_classes_), 0);
    return it->second;
}

NodeStats* NodeStore::find(const NodeKey& key) {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
}

const NodeStats* NodeStore::find(const NodeKey& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
}

NodeStats& NodeStore::at(const NodeKey& key) {
    auto* s = find(key);
    if (!s) throw std::runtime_error("node store: key not present");
    return *s;
}

const NodeStats& NodeStore::at(const NodeKey& key) const {
    auto* s = find(key);
    if (!s) throw std::runtime_error("node store: key not present");
    return *s;
}

}  // namespace tsdt
